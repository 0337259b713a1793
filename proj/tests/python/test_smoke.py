"""Smoke tests for the python bindings."""

import json

import pytest

import indcluster


def test_clean_affiliation():
    assert (
        indcluster.clean_affiliation("1 Department of Physics, IIT Delhi")
        == "Department of Physics, IIT Delhi"
    )
    assert indcluster.clean_affiliation("AIIMS,  New Delhi ") == "AIIMS, New Delhi"
    assert indcluster.clean_affiliation("42") == ""


def test_normalize_author():
    assert indcluster.normalize_author(" A.  Kumar ") == "A. Kumar"


def test_cluster_file(tmp_path):
    corpus = tmp_path / "corpus.jsonl"
    lines = [
        {"doi": "10.1/p1", "authors": [{"name": "Author 1", "affiliations": ["Univ A"]}]},
        {"doi": "10.1/p2", "authors": [{"name": "Author 1", "affiliations": ["Univ B"]}]},
        {"doi": "10.1/p3", "authors": [{"name": "Author 2", "affiliations": ["Univ C"]}]},
    ]
    corpus.write_text("\n".join(json.dumps(l) for l in lines) + "\n")

    result = indcluster.cluster_file(str(corpus), threshold=1)
    assert result["threshold"] == 1
    assert result["singletons"] == 1
    assert result["clusters"][0]["members"] == ["Univ A", "Univ B"]


def test_generate_and_score_roundtrip(tmp_path):
    corpus = tmp_path / "synth.jsonl"
    truth = tmp_path / "truth.jsonl"
    indcluster.generate_corpus(
        str(corpus), str(truth), institutes=5, aliases=3, authors=4, papers=5, seed=3
    )
    score = indcluster.score_file(str(corpus), str(truth), threshold=4)
    assert score["precision"] == 1.0
    assert score["recall"] == 1.0

    rows = indcluster.sweep_file(str(corpus), 1, 5)
    clustered = [r[3] for r in rows]
    assert clustered == sorted(clustered, reverse=True)


def test_worker_determinism(tmp_path):
    corpus = tmp_path / "synth.jsonl"
    truth = tmp_path / "truth.jsonl"
    indcluster.generate_corpus(str(corpus), str(truth), institutes=20, seed=11)
    snapshots = {
        indcluster.cooccurrence_jsonl(str(corpus), workers=w) for w in (1, 2, 4, 8)
    }
    assert len(snapshots) == 1


def test_token_baseline():
    clusters = indcluster.token_baseline(
        ["AIIMS New Delhi", "AIIMS, New Delhi", "AIIMS Jodhpur"], 0.9
    )
    assert clusters == [["AIIMS New Delhi", "AIIMS, New Delhi"]]


def test_missing_file_raises(tmp_path):
    with pytest.raises(RuntimeError):
        indcluster.cluster_file(str(tmp_path / "absent.jsonl"))
