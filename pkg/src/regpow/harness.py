"""Prediction-versus-oracle reconciliation, corpus runs and report assembly."""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import graph as gr
from .cache import NullCache, ResultCache
from .edge_ideals import (EmptyEdgeSet, PreconditionViolated, oracle_betti,
                          verify_colon_lemma, verify_dseq_hypotheses)
from .formulas import PROVEN, ClassOutOfScope, matsuda_murai_bounds, predict
from .polyring import BudgetExceeded
from .taxonomy import classify

SCHEMA_VERSION = 1
DEFAULT_BUDGET = 300.0
DEFAULT_CHAR = 32003
AUTO_T3_MAX_VARS = 10


@dataclass
class CorpusEntry:
    id: str
    graph: gr.Graph
    source_path: str = ""
    tags: list = field(default_factory=list)


def read_tags(text):
    """``# tags: a, b`` comment lines in an edge-list file."""
    tags = []
    for line in text.splitlines():
        line = line.strip()
        if line.startswith("#") and line[1:].strip().lower().startswith("tags:"):
            body = line[1:].strip()[5:]
            tags += [t.strip() for t in body.split(",") if t.strip()]
    return tags


def load_entry(path):
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    return CorpusEntry(path.stem, gr.parse_edge_list(text), str(path), read_tags(text))


def graph_json(g):
    return {"n": g.n, "m": g.m, "edges": [list(e) for e in g.sorted_edges()]}


def powers_for(g, t_max):
    """Powers to compute: ``1..t_max``; by default 1, 2 and (for at most ten ring
    variables) 3."""
    if t_max is not None:
        return list(range(1, t_max + 1)), []
    if 2 * g.n <= AUTO_T3_MAX_VARS:
        return [1, 2, 3], []
    return [1, 2], [3]


def _ms(t0):
    return round((time.perf_counter() - t0) * 1000, 1)


def _hypotheses(g, kind, cls, char, deadline, full):
    out = {}
    if g.m == 0 or not (cls.is_aci or cls.is_ci):
        return {"status": "not-applicable"}
    e = tuple(cls.witness["edge"]) if cls.is_aci and "edge" in cls.witness else None
    try:
        rep = verify_dseq_hypotheses(g, kind, e, char,
                                     obs24_powers=(2,) if full and cls.is_aci else (),
                                     deadline=deadline)
        out["sequence"] = rep.to_json()
        ok = rep.prefix_regular and rep.d_sequence and all(rep.obs24.values())
        out["status"] = "holds" if ok else "failed-on-natural-generators"
    except BudgetExceeded:
        out["status"] = "budget-exceeded"
    if kind == "parity" and not gr.is_bipartite(g):
        cand = [e] if e is not None else []
        cand += [f for f in g.sorted_edges() if f not in cand]
        target = next((f for f in cand if gr.is_bipartite(gr.delete_edge(g, f))), None)
        if target is None:
            out["colon_identity"] = {"status": "not-applicable"}
        else:
            try:
                ok = verify_colon_lemma(g, target, char, deadline)
                out["colon_identity"] = {"edge": list(target), "holds": ok,
                                         "status": "holds" if ok else "fails"}
            except BudgetExceeded:
                out["colon_identity"] = {"edge": list(target), "status": "budget-exceeded"}
            except PreconditionViolated as exc:
                out["colon_identity"] = {"status": "not-applicable", "reason": str(exc)}
    return out


def verify_graph(g, kind, t_max=None, char=DEFAULT_CHAR, budget=DEFAULT_BUDGET,
                 cache=None, entry_id="graph", checks="basic"):
    """Full report for one graph and one ideal kind.

    Returns ``(report, run_info)``: the report is deterministic, ``run_info``
    holds timings and cache statistics.
    """
    cache = cache or NullCache()
    timings = {}
    t0 = time.perf_counter()
    cls = classify(g, kind)
    timings["classify"] = _ms(t0)
    report = {
        "schema_version": SCHEMA_VERSION,
        "id": entry_id,
        "kind": kind,
        "char": char,
        "graph": graph_json(g),
        "classification": cls.to_json(),
    }
    t0 = time.perf_counter()
    try:
        pred = predict(cls)
        report["prediction"] = pred.to_json()
    except ClassOutOfScope as exc:
        pred = None
        report["prediction"] = {"status": "unavailable", "reason": str(exc)}
    timings["predict"] = _ms(t0)

    powers, skipped = powers_for(g, t_max)
    rows = []
    cache_hits = 0
    for t in powers:
        row = {"t": t}
        if pred is not None:
            row.update(predicted=pred.value(t), status=pred.status_at(t), source=pred.source_at(t))
        else:
            row.update(predicted=None, status="unavailable", source="")
        t0 = time.perf_counter()
        if g.m == 0:
            row.update(oracle=None, outcome="no-edges")
        else:
            table = cache.get_graph(g, kind, t, char)
            if table is not None:
                cache_hits += 1
            else:
                try:
                    table = oracle_betti(g, kind, t, char, time.monotonic() + budget)
                    cache.put_graph(g, kind, t, char, table)
                except BudgetExceeded:
                    table = None
            if table is None:
                row.update(oracle=None, outcome="budget-exceeded")
            else:
                row.update(oracle=table.regularity(), outcome="computed",
                           pdim=table.pdim(), betti=table.to_json()["entries"])
        timings[f"oracle_t{t}"] = _ms(t0)
        if row["oracle"] is None or row["predicted"] is None or row["status"] != PROVEN:
            row["match"] = None
        else:
            row["match"] = row["oracle"] == row["predicted"]
        rows.append(row)
    for t in skipped:
        rows.append({"t": t, "predicted": pred.value(t) if pred else None,
                     "status": pred.status_at(t) if pred else "unavailable",
                     "source": pred.source_at(t) if pred else "",
                     "oracle": None, "outcome": "skipped-size", "match": None})
    report["powers"] = rows
    report["mismatches"] = [r["t"] for r in rows if r["match"] is False]

    if g.m:
        t1 = next((r for r in rows if r["t"] == 1 and r["oracle"] is not None), None)
        lo, hi = matsuda_murai_bounds(g, kind)
        bounds = {"lower": lo, "upper": hi}
        if t1 is not None:
            reg = t1["oracle"]
            bounds["holds"] = reg >= lo and (hi is None or reg <= hi)
        report["bounds"] = bounds

    if checks != "none":
        t0 = time.perf_counter()
        report["hypotheses"] = _hypotheses(g, kind, cls, char, time.monotonic() + budget,
                                           checks == "full")
        timings["hypotheses"] = _ms(t0)
    run_info = {"timings_ms": timings, "cache_hits": cache_hits}
    return report, run_info


def exit_code_for(reports):
    return 1 if any(r.get("mismatches") for r in reports) else 0


def _entry_job(args):
    path, kinds, t_max, char, budget, cache_dir, checks = args
    entry_id = Path(path).stem
    try:
        entry = load_entry(path)
    except (gr.GraphError, OSError) as exc:
        return entry_id, {"schema_version": SCHEMA_VERSION, "id": entry_id,
                          "error": str(exc)}, {}
    cache = ResultCache(cache_dir) if cache_dir is not None else NullCache()
    out = {"schema_version": SCHEMA_VERSION, "id": entry.id, "source_path": entry.source_path,
           "tags": entry.tags, "reports": []}
    info = {}
    for kind in kinds:
        try:
            rep, run = verify_graph(entry.graph, kind, t_max, char, budget, cache, entry.id, checks)
        except (EmptyEdgeSet, ValueError) as exc:
            rep, run = {"kind": kind, "error": str(exc)}, {}
        expected = [t.split(":", 1)[1] for t in entry.tags if t.startswith(kind + ":")]
        if expected and "classification" in rep:
            rep["expected_label"] = expected[0]
            rep["label_matches"] = expected[0] in (rep["classification"]["verdict"],
                                                   rep["classification"]["family"])
        out["reports"].append(rep)
        info[kind] = run
    return entry.id, out, info


def corpus_files(directory):
    d = Path(directory)
    return sorted(p for p in d.iterdir() if p.is_file() and p.suffix in (".txt", ".edges"))


def run_corpus(directory, kinds=("binomial", "parity"), t_max=None, char=DEFAULT_CHAR,
               budget=DEFAULT_BUDGET, jobs=1, cache_dir=None, output=None, checks="basic"):
    """Verify every edge-list file of a directory.  Returns ``(summary, entries, info)``.

    Entries are ordered by id whatever the degree of parallelism.
    """
    files = corpus_files(directory)
    args = [(str(p), tuple(kinds), t_max, char, budget,
             None if cache_dir is None else str(cache_dir), checks) for p in files]
    if jobs > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_entry_job, args))
    else:
        results = [_entry_job(a) for a in args]
    results.sort(key=lambda r: r[0])
    seen = set()
    for eid, _, _ in results:
        if eid in seen:
            raise ValueError(f"duplicate corpus id {eid!r}")
        seen.add(eid)
    entries = [r[1] for r in results]
    info = {r[0]: r[2] for r in results}
    summary = summarize(entries)
    if output is not None:
        out = Path(output)
        out.mkdir(parents=True, exist_ok=True)
        for e in entries:
            # timings and cache hits live in a separate, non-deterministic block
            _write_json(out / f"{e['id']}.json", dict(e, run=info.get(e["id"], {})))
        _write_json(out / "summary.json", summary)
    return summary, entries, info


def summarize(entries):
    s = {"schema_version": SCHEMA_VERSION, "entries": len(entries), "reports": 0,
         "matches": 0, "mismatches": 0, "skips": 0, "unverified": 0, "errors": 0,
         "label_mismatches": 0, "mismatched": []}
    for e in entries:
        if "error" in e:
            s["errors"] += 1
            continue
        for rep in e["reports"]:
            if "error" in rep:
                s["errors"] += 1
                continue
            s["reports"] += 1
            if rep.get("label_matches") is False:
                s["label_mismatches"] += 1
            for row in rep["powers"]:
                if row["match"] is True:
                    s["matches"] += 1
                elif row["match"] is False:
                    s["mismatches"] += 1
                    s["mismatched"].append(f"{e['id']}:{rep['kind']}:t={row['t']}")
                elif row["outcome"] in ("budget-exceeded", "skipped-size"):
                    s["skips"] += 1
                else:
                    s["unverified"] += 1
    return s


def summary_table(summary):
    keys = ["entries", "reports", "matches", "mismatches", "skips", "unverified", "errors",
            "label_mismatches"]
    width = max(len(k) for k in keys)
    lines = [f"{k:<{width}}  {summary[k]}" for k in keys]
    for m in summary["mismatched"]:
        lines.append(f"MISMATCH {m}")
    return "\n".join(lines)


def _write_json(path, data):
    tmp = f"{path}.tmp{os.getpid()}"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=2, sort_keys=True)
        fh.write("\n")
    os.replace(tmp, path)
