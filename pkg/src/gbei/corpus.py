"""Property-run harness over random or exhaustive graph corpora."""

import csv
import io
import json
import random
import time
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Optional

import networkx as nx

from .bounds import FormulaConflict, report
from .caps import check_cap
from .classes import classify
from .errors import CapExceeded, GBTimeout, NotSquarefree
from .graph import SimpleGraph, invariants

SCHEMA_VERSION = 1
ATLAS_MAX_N = 7


@dataclass
class CorpusConfig:
    m: int = 2
    n_range: tuple = (4, 7)
    count: int = 100
    seed: int = 1
    oracle: bool = False
    exhaustive_n: Optional[int] = None
    timings: bool = False


def random_connected_graph(n, rng, extra_p=0.3):
    """Random spanning tree (each vertex attaches to an earlier one in a random
    order) plus each remaining pair with probability ``extra_p``."""
    order = list(range(1, n + 1))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if (u, v) not in edges and rng.random() < extra_p:
                edges.add((u, v))
    return SimpleGraph(n, edges)


def connected_graphs_up_to_isomorphism(n):
    """All connected graphs on ``n`` vertices, one per isomorphism class."""
    check_cap("exhaustive enumeration (graph atlas)", n, ATLAS_MAX_N)
    out = []
    for idx, G in enumerate(nx.graph_atlas_g()):
        if G.number_of_nodes() == n and nx.is_connected(G):
            out.append((f"atlas{idx:04d}", SimpleGraph(n, [(u + 1, v + 1) for u, v in G.edges()])))
    return out


def _graphs(cfg):
    if cfg.exhaustive_n is not None:
        return connected_graphs_up_to_isomorphism(cfg.exhaustive_n)
    rng = random.Random(cfg.seed)
    lo, hi = cfg.n_range
    return [(f"r{i:05d}", random_connected_graph(rng.randint(lo, hi), rng)) for i in range(cfg.count)]


def evaluate(graph_id, g, m, oracle=False, timings=False):
    rec = {"graphId": graph_id, "n": g.n, "edgeCount": g.edge_count(),
           "edges": [list(e) for e in g.sorted_edges()], "m": m}
    violations = []
    times = {}
    t0 = time.perf_counter()
    rec["invariants"] = invariants(g).as_dict()
    rec["classFlags"] = classify(g, with_certificates=False).flags
    times["combinatorial"] = time.perf_counter() - t0
    rec.update(lower=None, upper=None, exact=None, exactSource="None", oracleDepth=None)
    try:
        rep = report(m, g)
        rec.update(lower=rep.lower, upper=rep.upper, exact=rep.exact, exactSource=rep.exact_source)
    except FormulaConflict as exc:
        violations.append(f"closed forms disagree: {exc}")
        rep = None
    if rep is not None:
        if rep.upper is not None and rep.lower > rep.upper:
            violations.append(f"lower {rep.lower} > upper {rep.upper}")
        if rep.exact is not None and not (rep.lower <= rep.exact and (rep.upper is None or rep.exact <= rep.upper)):
            violations.append(f"exact {rep.exact} outside [{rep.lower}, {rep.upper}]")
    if oracle:
        t1 = time.perf_counter()
        try:
            from .oracle import oracle_depth
            od = oracle_depth(m, g)
            rec["oracleDepth"] = od
            if rep is not None:
                if rep.exact is not None and od != rep.exact:
                    violations.append(f"oracle {od} != closed form {rep.exact}")
                if od < rep.lower or (rep.upper is not None and od > rep.upper):
                    violations.append(f"oracle {od} outside [{rep.lower}, {rep.upper}]")
        except (CapExceeded, GBTimeout, NotSquarefree) as exc:
            rec["oracleDepth"] = None
            rec.setdefault("notes", []).append(f"oracle skipped: {exc}")
        times["oracle"] = time.perf_counter() - t1
    rec["violations"] = violations
    rec["wallTimes"] = {k: round(v, 6) for k, v in times.items()} if timings else None
    return rec


def run_corpus(cfg):
    records = [evaluate(gid, g, cfg.m, cfg.oracle, cfg.timings) for gid, g in _graphs(cfg)]
    records.sort(key=lambda r: r["graphId"])
    return {
        "schemaVersion": SCHEMA_VERSION,
        "generatedAt": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "config": {"m": cfg.m, "nRange": list(cfg.n_range), "count": cfg.count, "seed": cfg.seed,
                   "oracle": cfg.oracle, "exhaustiveN": cfg.exhaustive_n},
        "records": records,
        "violationCount": sum(len(r["violations"]) for r in records),
    }


CSV_COLUMNS = ["graphId", "n", "edgeCount", "m", "lower", "upper", "exact", "exactSource",
               "oracleDepth", "violations"]


def report_to_csv(rep):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(CSV_COLUMNS)
    for r in rep["records"]:
        row = [r[c] for c in CSV_COLUMNS[:-1]] + ["; ".join(r["violations"])]
        w.writerow(["" if v is None else v for v in row])
    return buf.getvalue()


def write_report(rep, path):
    with open(path, "w") as fh:
        json.dump(rep, fh, indent=1, sort_keys=True)
        fh.write("\n")
    csv_path = str(path)[:-5] + ".csv" if str(path).endswith(".json") else str(path) + ".csv"
    with open(csv_path, "w", newline="") as fh:
        fh.write(report_to_csv(rep))
    return csv_path
