"""Experiment pipeline: corpus loading, per-(graph, k) records, CSV output.

Corpus sources
--------------
* a directory: every ``*.g6`` file contributes one graph per line
  (id ``<stem>-<line:05d>``); any other file is read as one graph in the
  format implied by its suffix (id ``<stem>``);
* a ``.g6`` file;
* a JSON manifest ``{"graphs": [...]}`` whose entries are
  ``{"id", "path", "format"?, "family"?}``,
  ``{"id", "gen": {GenSpec fields}}`` or
  ``{"builtin": "small_connected", "min_n"?, "max_n"?}``;
* the literal ``standard``: every connected graph on 1..8 vertices plus the
  seeded G(n, p) and random regular instances of :func:`standard_manifest`.

Row seeds are ``derive_seed(master, graph_id, k)``.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import io as gio
from .algorithms import AlgoParams, greedy_two_packing, randomized_with_restarts
from .atlas import small_graphs
from .bounds import bounds_report
from .domination import gamma_exact, gamma_ktuple_exact
from .generators import GenSpec
from .graph import Graph, GraphError
from .packing import DEFAULT_BUDGET, PackingSet, exact_lk, is_maximal, verify_packing
from .seeds import derive_seed

CSV_COLUMNS = (
    "graph_id", "family", "n", "m", "max_deg", "min_deg", "connected", "regular", "k",
    "exact", "randomized_size", "randomized_restarts", "greedy_size",
    "lb_eq1", "lb_cor1", "lb_eq2", "lb_eq3", "lb_eq4", "lb_eq5",
    "ub_ineq5", "ub_k_gamma", "ub_gamma_xk", "ub_thm6", "ub_prop1", "seed",
)

# CSV column -> (side, BoundsReport key)
BOUND_COLUMNS = {
    "lb_eq1": ("lower", "main_eq1"),
    "lb_cor1": ("lower", "weak_cor1"),
    "lb_eq2": ("lower", "k1_eq2"),
    "lb_eq3": ("lower", "greedy_eq3"),
    "lb_eq4": ("lower", "degree_sum_eq4"),
    "lb_eq5": ("lower", "regular_k2_eq5"),
    "ub_ineq5": ("upper", "fraction_ineq5"),
    "ub_k_gamma": ("upper", "k_gamma"),
    "ub_gamma_xk": ("upper", "gamma_times_k"),
    "ub_thm6": ("upper", "ktuple_formula_thm6"),
    "ub_prop1": ("upper", "regular_prop1"),
}

DEFAULT_EXACT_CAP = 20


@dataclass(frozen=True)
class CorpusEntry:
    graph_id: str
    family: str
    graph: Graph


@dataclass(frozen=True)
class ExperimentConfig:
    seed: int = 0
    k_min: int = 1
    k_max: int | None = None  # None: up to max_deg + 1
    exact_cap: int = DEFAULT_EXACT_CAP
    budget: int = DEFAULT_BUDGET
    max_restarts: int = 1000


@dataclass
class GraphOutcome:
    rows: list[dict]
    inconsistent: list[str]
    unknown: int
    bound_misses: list[str]
    notes: list[str]


def standard_manifest() -> dict:
    graphs: list[dict] = [{"builtin": "small_connected", "min_n": 1, "max_n": 8}]
    for p in (0.2, 0.5, 0.8):
        for n in (12, 16, 20):
            for s in range(1, 6):
                graphs.append({"id": f"gnp-n{n}-p{p}-s{s}", "gen": {"family": "gnp", "n": n, "p": p, "seed": s}})
    for n, d in ((10, 3), (12, 4), (14, 5)):
        for s in range(1, 6):
            graphs.append({"id": f"reg-n{n}-d{d}-s{s}", "gen": {"family": "random_regular", "n": n, "degree": d, "seed": s}})
    return {"graphs": graphs}


def _g6_entries(path: Path) -> list[CorpusEntry]:
    graphs = gio.parse_graph6_lines(path.read_text(encoding="ascii").splitlines())
    return [CorpusEntry(f"{path.stem}-{i:05d}", "graph6", g) for i, g in enumerate(graphs)]


def _manifest_entries(manifest: dict, base: Path) -> list[CorpusEntry]:
    out = []
    for item in manifest.get("graphs", []):
        if "builtin" in item:
            if item["builtin"] != "small_connected":
                raise GraphError(f"unknown builtin corpus {item['builtin']!r}")
            lo, hi = item.get("min_n", 1), item.get("max_n", 8)
            for i, g in enumerate(small_graphs(hi, lo, connected=True)):
                out.append(CorpusEntry(f"small-n{g.n}-{i:05d}", "small_connected", g))
        elif "gen" in item:
            spec = GenSpec(**item["gen"])
            out.append(CorpusEntry(item["id"], item.get("family", spec.family), spec.build()))
        elif "path" in item:
            path = base / item["path"]
            out.append(CorpusEntry(item["id"], item.get("family", "file"), gio.read_graph(path, item.get("format"))))
        else:
            raise GraphError(f"manifest entry without builtin/gen/path: {item}")
    return out


def load_corpus(source: str | Path, fmt: str | None = None) -> list[CorpusEntry]:
    if str(source) == "standard":
        entries = _manifest_entries(standard_manifest(), Path("."))
    else:
        path = Path(source)
        if path.is_dir():
            entries = []
            for f in sorted(path.iterdir()):
                if not f.is_file() or f.name.startswith("."):
                    continue
                if f.suffix.lower() == ".g6":
                    entries.extend(_g6_entries(f))
                else:
                    entries.append(CorpusEntry(f.stem, "file", gio.read_graph(f, fmt)))
        elif path.suffix.lower() == ".json":
            entries = _manifest_entries(json.loads(path.read_text(encoding="utf-8")), path.parent)
        elif path.suffix.lower() == ".g6":
            entries = _g6_entries(path)
        else:
            entries = [CorpusEntry(path.stem, "file", gio.read_graph(path, fmt))]
    ids = [e.graph_id for e in entries]
    if len(set(ids)) != len(ids):
        raise GraphError("duplicate graph ids in corpus")
    return entries


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _bound_cell(b) -> str:
    if b.status == "unknown":
        return "unknown"
    return _fmt(b.integer_form) if b.applicable else ""


def _certified(g: Graph, x: PackingSet, k: int, what: str, problems: list[str]) -> int:
    if verify_packing(g, x.members, k):
        problems.append(f"{what} packing invalid")
    elif not is_maximal(g, x.members, k):
        problems.append(f"{what} packing not maximal")
    return x.size


def run_graph(entry: CorpusEntry, cfg: ExperimentConfig) -> GraphOutcome:
    g = entry.graph
    hi = g.max_deg + 1
    k_lo = max(1, cfg.k_min)
    k_hi = hi if cfg.k_max is None else min(cfg.k_max, hi)
    notes = []
    if cfg.k_max is not None and cfg.k_max > hi:
        notes.append(f"{entry.graph_id}: k range clamped to <= {hi}")
    attempt_exact = g.n <= cfg.exact_cap
    gamma = gamma_exact(g, budget=cfg.budget) if attempt_exact else None
    greedy = greedy_two_packing(g)
    out = GraphOutcome([], [], 0, [], notes)
    for k in range(k_lo, k_hi + 1):
        problems: list[str] = []
        seed = derive_seed(cfg.seed, entry.graph_id, k)
        gamma_k = None
        if attempt_exact and g.min_deg >= k - 1:
            gamma_k = gamma if k == 1 else gamma_ktuple_exact(g, k, budget=cfg.budget)
        report = bounds_report(g, k, gamma=gamma, gamma_k=gamma_k)
        problems.extend(report.diagnostics())

        exact = None
        if attempt_exact:
            res = exact_lk(g, k, budget=cfg.budget)
            if res.complete:
                exact = res.optimum
                if verify_packing(g, res.witness.members, k) or res.witness.size != exact:
                    problems.append("exact witness invalid")
                problems.extend(report.check_value(exact))
            else:
                out.unknown += 1
        if gamma is not None and not gamma.complete or gamma_k is not None and not gamma_k.complete:
            out.unknown += 1

        if k <= g.max_deg:
            run = randomized_with_restarts(g, k, AlgoParams(seed=seed, max_restarts=cfg.max_restarts))
            rand_size = _certified(g, run.packing, k, "randomized", problems)
            restarts = run.restarts_used
            if not run.bound_met:
                out.bound_misses.append(f"{entry.graph_id} k={k}: size {rand_size} < target {run.bound_target}")
        else:
            rand_size, restarts = g.n, 0
        greedy_size = _certified(g, greedy, 1, "greedy", problems) if k == 1 else None

        limit = exact if exact is not None else report.best_upper()
        for label, size in (("randomized", rand_size), ("greedy", greedy_size)):
            if size is not None and limit is not None and size > limit:
                problems.append(f"{label} size {size} exceeds {limit}")

        row = {
            "graph_id": entry.graph_id,
            "family": entry.family,
            "n": g.n,
            "m": g.m,
            "max_deg": g.max_deg,
            "min_deg": g.min_deg,
            "connected": g.is_connected(),
            "regular": g.is_regular(),
            "k": k,
            "exact": exact if exact is not None else "unknown",
            "randomized_size": rand_size,
            "randomized_restarts": restarts,
            "greedy_size": greedy_size,
            "seed": seed,
        }
        for col, (side, key) in BOUND_COLUMNS.items():
            row[col] = getattr(report, side)[key]
        out.rows.append(row)
        if problems:
            out.inconsistent.append(f"INCONSISTENT {entry.graph_id} k={k}: " + "; ".join(problems))
    return out


def _run_star(args):
    return run_graph(*args)


def run_experiment(entries: list[CorpusEntry], cfg: ExperimentConfig, jobs: int = 1) -> list[GraphOutcome]:
    """One outcome per entry, in input order, independent of ``jobs``."""
    work = [(e, cfg) for e in entries]
    if jobs <= 1 or len(work) <= 1:
        return [run_graph(*w) for w in work]
    chunk = max(1, len(work) // (jobs * 8))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_star, work, chunksize=chunk))


def rows_to_csv(outcomes: list[GraphOutcome]) -> str:
    rows = [r for o in outcomes for r in o.rows]
    rows.sort(key=lambda r: (r["graph_id"], r["k"]))
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in rows:
        writer.writerow([_bound_cell(r[c]) if c in BOUND_COLUMNS else _fmt(r[c]) for c in CSV_COLUMNS])
    return buf.getvalue()


def summarize(outcomes: list[GraphOutcome], stream=None) -> int:
    """Print notes and problems; return the exit code (0, 2 or 3)."""
    stream = stream or sys.stderr
    inconsistent = [line for o in outcomes for line in o.inconsistent]
    unknown = sum(o.unknown for o in outcomes)
    for o in outcomes:
        for line in o.notes + o.bound_misses:
            print(line, file=stream)
    for line in inconsistent:
        print(line, file=stream)
    rows = sum(len(o.rows) for o in outcomes)
    misses = sum(len(o.bound_misses) for o in outcomes)
    print(f"rows={rows} inconsistent={len(inconsistent)} unknown={unknown} randomized_misses={misses}", file=stream)
    if inconsistent:
        return 3
    if unknown:
        return 2
    return 0
