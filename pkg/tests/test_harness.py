from __future__ import annotations

import json
import shutil
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from regpow import cli, harness
from regpow import graph as gr
from regpow.cache import ENV_VAR, ResultCache, cache_key, default_cache_dir
from regpow.edge_ideals import oracle_betti
from regpow.formulas import RegularityPrediction
from regpow.graph import Graph

from .conftest import graphs

CORPUS = Path(__file__).resolve().parent.parent / "corpus"
C3 = "3 3 / 1 2 / 2 3 / 1 3"
C4_CHORD = "4 5 / 1 2 / 2 3 / 3 4 / 1 4 / 1 3"
TWO_TRIANGLES = "6 7 / 1 2 / 2 3 / 1 3 / 4 5 / 5 6 / 4 6 / 3 4"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# -- cache -------------------------------------------------------------------

def test_cache_roundtrip(tmp_path):
    cache = ResultCache(tmp_path)
    g = gr.cycle_graph(4)
    table = oracle_betti(g, "binomial", 1)
    assert cache.get_graph(g, "binomial", 1, 32003) is None
    cache.put_graph(g, "binomial", 1, 32003, table)
    assert cache.get_graph(g, "binomial", 1, 32003) == table
    assert cache_key(g, "binomial", 1, 32003) != cache_key(g, "binomial", 1, 101)
    assert cache_key(g, "binomial", 1, 32003) != cache_key(g, "parity", 1, 32003)


@given(graphs(max_n=7), st.data())
def test_cache_key_relabeling_invariant(g, data):
    perm = list(data.draw(st.permutations(list(range(1, g.n + 1)))))
    assert cache_key(g, "parity", 2, 101) == cache_key(g.relabel(perm), "parity", 2, 101)


def test_isomorphic_graph_hits(tmp_path):
    cache = ResultCache(tmp_path)
    g = gr.balloon_graph(3, 1)
    cache.put_graph(g, "binomial", 1, 32003, oracle_betti(g, "binomial", 1))
    h = g.relabel([4, 3, 1, 2])
    assert cache.get_graph(h, "binomial", 1, 32003) == oracle_betti(h, "binomial", 1)
    assert cache.hits == 1


def test_corrupt_entry_is_evicted(tmp_path):
    cache = ResultCache(tmp_path)
    g = gr.path_graph(3)
    cache.put_graph(g, "binomial", 1, 32003, oracle_betti(g, "binomial", 1))
    key = cache_key(g, "binomial", 1, 32003)
    path = tmp_path / key[:2] / f"{key}.json"
    path.write_text("{not json")
    assert cache.get_graph(g, "binomial", 1, 32003) is None
    assert not path.exists()


def test_cache_dir_env(monkeypatch, tmp_path):
    monkeypatch.setenv(ENV_VAR, str(tmp_path / "env"))
    assert default_cache_dir() == tmp_path / "env"
    assert default_cache_dir(tmp_path / "flag") == tmp_path / "flag"
    monkeypatch.delenv(ENV_VAR)
    assert default_cache_dir() == Path(".regpow-cache")


# -- command line ------------------------------------------------------------

def test_classify_c3(capsys):
    code, out, _ = run(capsys, "classify", C3, "--ideal", "binomial")
    data = json.loads(out)
    assert code == 0 and data["binomial"]["verdict"] == "ACI_C3Type-degenerate"
    assert data["schema_version"] == harness.SCHEMA_VERSION


def test_classify_parse_error(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 1\n1 2 3\n")
    code, _, err = run(capsys, "classify", str(bad))
    assert code == 2 and "line 2" in err and "column" in err
    code, _, _ = run(capsys, "classify", "3 1 / 1 2 3")
    assert code == 2


def test_classify_empty_edge_set(capsys):
    code, out, _ = run(capsys, "classify", "3 0")
    data = json.loads(out)
    assert code == 0 and data["parity"]["verdict"] == "NotACI"
    assert data["parity"]["reason"] == "no edges"


def test_predict_examples(capsys):
    _, out, _ = run(capsys, "predict", C4_CHORD, "--ideal", "parity", "--t-max", "3")
    table = json.loads(out)["parity"]["table"]
    assert [r["value"] for r in table] == [3, 5, 7] and {r["status"] for r in table} == {"proven"}
    _, out, _ = run(capsys, "predict", TWO_TRIANGLES, "--ideal", "parity", "--t-max", "2")
    table = json.loads(out)["parity"]["table"]
    assert [r["status"] for r in table] == ["conjectured", "conjectured"]
    _, out, _ = run(capsys, "predict", "4 3 / 1 2 / 2 3 / 3 4")
    rec = json.loads(out)["binomial"]
    assert rec["table"][0]["value"] == 3 and "note" in rec
    _, out, _ = run(capsys, "predict", "4 6 / 1 2 / 1 3 / 1 4 / 2 3 / 2 4 / 3 4")
    assert json.loads(out)["binomial"]["status"] == "unavailable"


@pytest.mark.parametrize("graph, ideal, t_max, values", [
    (C3, "binomial", 2, [1, 3]),
    ("4 3 / 1 2 / 1 3 / 1 4", "binomial", 2, [2, 4]),
    (C4_CHORD, "parity", 1, [3]),
])
def test_verify_examples(capsys, tmp_path, graph, ideal, t_max, values):
    code, out, _ = run(capsys, "verify", graph, "--ideal", ideal, "--t-max", str(t_max),
                       "--cache-dir", str(tmp_path))
    rep = json.loads(out)["reports"][0]
    assert code == 0
    assert [r["oracle"] for r in rep["powers"]] == values
    assert all(r["match"] for r in rep["powers"])


def test_mismatch_exits_one(capsys, monkeypatch):
    # inject a wrong formula: the harness must flag it and exit 1
    def wrong(cls, t=None):
        return RegularityPrediction(2, 0, 1, "proven", "deliberately wrong")
    monkeypatch.setattr(harness, "predict", wrong)
    code, out, err = run(capsys, "verify", C3, "--t-max", "2", "--no-cache")
    assert code == 1 and "MISMATCH" in err
    assert json.loads(out)["reports"][0]["mismatches"] == [1, 2]


def test_unproven_never_matches():
    rep, _ = harness.verify_graph(Graph(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (3, 4)]),
                                  "parity", t_max=1, checks="none")
    row = rep["powers"][0]
    assert row["status"] == "conjectured" and row["match"] is None and row["oracle"] == 5


def test_budget_exceeded_is_recorded():
    rep, _ = harness.verify_graph(gr.fm_graph(3), "binomial", t_max=2, budget=0.0, checks="none")
    assert [r["outcome"] for r in rep["powers"]] == ["budget-exceeded"] * 2
    assert rep["mismatches"] == [] and harness.exit_code_for([rep]) == 0


def test_default_powers():
    assert harness.powers_for(gr.cycle_graph(5), None) == ([1, 2, 3], [])
    assert harness.powers_for(gr.cycle_graph(6), None) == ([1, 2], [3])
    assert harness.powers_for(gr.cycle_graph(6), 4) == ([1, 2, 3, 4], [])


# -- corpus runs -------------------------------------------------------------

SMALL = ["triangle.txt", "cycle_c4.txt", "star_k13.txt", "c4_chord.txt", "k4.txt"]


@pytest.fixture
def small_corpus(tmp_path):
    d = tmp_path / "corpus"
    d.mkdir()
    for name in SMALL:
        shutil.copy(CORPUS / name, d / name)
    return d


def test_empty_corpus(capsys, tmp_path):
    code, out, _ = run(capsys, "corpus", str(tmp_path), "--no-cache")
    assert code == 0 and "entries" in out
    summary, entries, _ = harness.run_corpus(tmp_path)
    assert summary["entries"] == 0 and entries == []


def test_oversized_graph_is_budget_skipped(tmp_path):
    (tmp_path / "big.txt").write_text(gr.format_edge_list(gr.fm_graph(3)))
    summary, _, _ = harness.run_corpus(tmp_path, kinds=("binomial",), t_max=1, budget=0.0,
                                       checks="none")
    assert summary["skips"] == 1 and summary["mismatches"] == 0


def test_bad_entry_recorded_and_run_continues(small_corpus):
    (small_corpus / "broken.txt").write_text("3 1\n1 2 3\n")
    summary, entries, _ = harness.run_corpus(small_corpus, t_max=1, checks="none")
    assert summary["errors"] == 1 and summary["entries"] == len(SMALL) + 1
    assert [e["id"] for e in entries] == sorted(e["id"] for e in entries)


def test_corpus_deterministic_and_parallel_equal(small_corpus, tmp_path):
    out1, out2 = tmp_path / "a", tmp_path / "b"
    s1, e1, _ = harness.run_corpus(small_corpus, t_max=2, output=out1, checks="basic")
    s2, e2, _ = harness.run_corpus(small_corpus, t_max=2, output=out2, jobs=2, checks="basic",
                                   cache_dir=tmp_path / "cache")
    assert e1 == e2 and s1 == s2
    for f in sorted(out1.iterdir()):
        a, b = json.loads(f.read_text()), json.loads((out2 / f.name).read_text())
        a.pop("run", None), b.pop("run", None)
        assert a == b
    s3, _, _ = harness.run_corpus(small_corpus, t_max=2, output=out1, checks="basic")
    assert (out1 / "summary.json").read_bytes() == (out2 / "summary.json").read_bytes()
    assert s1["mismatches"] == 0 and s1["label_mismatches"] == 0


def test_corpus_cli_writes_reports(capsys, small_corpus, tmp_path):
    out = tmp_path / "reports"
    code, text, _ = run(capsys, "corpus", str(small_corpus), "--t-max", "1", "--output", str(out),
                        "--cache-dir", str(tmp_path / "c"), "--checks", "none")
    assert code == 0 and "mismatches" in text
    names = sorted(p.name for p in out.iterdir())
    assert names == sorted([n.replace(".txt", ".json") for n in SMALL] + ["summary.json"])
    entry = json.loads((out / "triangle.json").read_text())
    assert "timings_ms" in entry["run"]["binomial"]
    assert entry["schema_version"] == harness.SCHEMA_VERSION
    assert entry["reports"][0]["expected_label"] == entry["reports"][0]["classification"]["verdict"]
