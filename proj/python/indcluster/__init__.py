"""Context-based institute name disambiguation.

Clusters raw affiliation strings by counting how many distinct authors use
each pair of strings, thresholding those counts into a graph, and reporting
connected components as institute clusters.
"""

import json

from ._core import (
    clean_affiliation,
    cluster_file_json,
    cooccurrence_jsonl,
    generate_corpus,
    normalize_author,
    score_file_json,
    sweep_file,
    token_baseline,
)

__all__ = [
    "clean_affiliation",
    "normalize_author",
    "cluster_file",
    "sweep_file",
    "generate_corpus",
    "score_file",
    "token_baseline",
    "cooccurrence_jsonl",
]

__version__ = "0.1.0"


def cluster_file(path, threshold=1, workers=1, include_singletons=False):
    """Cluster a JSON-Lines corpus file; returns the clustering as a dict."""
    return json.loads(cluster_file_json(path, threshold, workers, include_singletons))


def score_file(corpus_path, truth_path, threshold=1, workers=1):
    """Pairwise precision/recall/F1 against a truth file, as a dict."""
    return json.loads(score_file_json(corpus_path, truth_path, threshold, workers))
