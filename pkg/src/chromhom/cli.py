"""Command-line interface.

Subcommands: ``csf``, ``homology``, ``les``, ``verify``, ``scan-c6`` and
``selftest``.  Graph inputs are structured documents (JSON or YAML) with
``vertices: [{id, weight}]`` and ``edges: [[id, id], ...]``; the edge array
order defines the edge order.  Output is human-readable text or one JSON
document per command.  Results of ``homology`` can be cached on disk,
keyed by a content hash of the canonical graph serialization and the
engine version; cache hits reproduce byte-identical output.
"""

import argparse
import hashlib
import json
import os
import sys
import tempfile
from dataclasses import dataclass
from itertools import combinations

from . import __version__
from .complexes import ChainComplex
from .graphs import (
    VertexWeightedGraph,
    build_graph,
    count_blocks,
    graph_from_weights,
    level_masks,
    path_graph,
)
from .homology import frobenius_series, homology_table, span_zero
from .lescheck import (
    cached_table,
    solve_quotient_from_row,
    verify_les,
    verify_structure_theorems,
)
from .symfunc import basis_convert, check_csf_oracle, csf_state_sum

DEFAULT_MAX_WEIGHT = 7
DEFAULT_MAX_EDGES = 8
CACHE_ENV_VAR = "CHROMHOM_CACHE_DIR"


@dataclass
class RunConfig:
    command: str
    inputs: list
    fmt: str = "text"
    max_weight: int = DEFAULT_MAX_WEIGHT
    max_edges: int = DEFAULT_MAX_EDGES
    force: bool = False
    cache_dir: str | None = None
    jobs: int = 1
    edge: int | None = None
    oracle_check: int | None = None
    shuffles: int = 0
    max_vertices: int = 4
    dump_matrices: str | None = None


def load_graph_document(path: str) -> VertexWeightedGraph:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError:
        import yaml

        doc = yaml.safe_load(text)
    return build_graph(doc)


def check_bounds(graph: VertexWeightedGraph, cfg: RunConfig) -> None:
    if cfg.force:
        from .characters import lift_degree_bound

        lift_degree_bound(graph.total_weight)
        return
    if graph.total_weight > cfg.max_weight:
        raise SystemExit(
            f"total weight {graph.total_weight} exceeds the bound "
            f"{cfg.max_weight}; pass --force to acknowledge the blowup"
        )
    if graph.m > cfg.max_edges:
        raise SystemExit(
            f"{graph.m} edges exceed the bound {cfg.max_edges}; "
            "pass --force to acknowledge the blowup"
        )


def _graph_key(graph: VertexWeightedGraph) -> str:
    payload = f"{__version__}\n{graph.serialize()}"
    return hashlib.sha256(payload.encode()).hexdigest()


def _cache_path(cfg: RunConfig, key: str) -> str | None:
    base = cfg.cache_dir or os.environ.get(CACHE_ENV_VAR)
    if not base:
        return None
    os.makedirs(base, exist_ok=True)
    return os.path.join(base, key + ".json")


def _cache_read(path: str | None):
    if path and os.path.exists(path):
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    return None


def _cache_write(path: str | None, payload: dict) -> None:
    if not path:
        return
    directory = os.path.dirname(path)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, sort_keys=True)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _build(graph: VertexWeightedGraph, cfg: RunConfig) -> ChainComplex:
    bound = graph.total_weight if cfg.force else cfg.max_weight
    from .complexes import build_complex

    if cfg.force:
        return ChainComplex(graph, max_total_weight=bound)
    return build_complex(graph)


def homology_payload(graph: VertexWeightedGraph, cfg: RunConfig) -> dict:
    key = _graph_key(graph)
    path = _cache_path(cfg, key)
    cached = _cache_read(path)
    if cached is not None:
        return cached
    cx = _build(graph, cfg)
    table = homology_table(cx)
    series = frobenius_series(table)
    payload = {
        "graph": graph.serialize(),
        "key": key,
        "table": table.to_json_dict(),
        "table_text": table.text_lines(),
        "frobenius": series.text(),
    }
    if cfg.dump_matrices:
        os.makedirs(cfg.dump_matrices, exist_ok=True)
        for (i, j) in sorted(cx.diffs):
            lines = cx.dump_matrix_lines(i, j)
            name = os.path.join(cfg.dump_matrices, f"{key[:12]}_d_{i}_{j}.txt")
            with open(name, "w", encoding="utf-8") as fh:
                fh.write("\n".join(lines) + "\n")
    _cache_write(path, payload)
    return payload


def cmd_csf(cfg: RunConfig, out) -> int:
    docs = []
    for path in cfg.inputs:
        graph = load_graph_document(path)
        check_bounds(graph, cfg)
        x = csf_state_sum(graph)
        doc = {
            "graph": graph.serialize(),
            "power_sum": x.text(),
            "schur": basis_convert(x, "s").text(),
        }
        if cfg.oracle_check:
            ok = all(
                check_csf_oracle(graph, k)
                for k in range(1, cfg.oracle_check + 1)
            )
            doc["oracle_check"] = {"colors_up_to": cfg.oracle_check, "ok": ok}
            if not ok:
                raise AssertionError("coloring oracle disagrees with the state sum")
        docs.append(doc)
    if cfg.fmt == "json":
        out.write(json.dumps({"command": "csf", "results": docs}, sort_keys=True))
        out.write("\n")
    else:
        for doc in docs:
            out.write(f"graph: {doc['graph']}\n")
            out.write(f"X (power sums) = {doc['power_sum']}\n")
            out.write(f"X (Schur)      = {doc['schur']}\n")
            if "oracle_check" in doc:
                out.write(
                    "coloring oracle agreement (k <= "
                    f"{doc['oracle_check']['colors_up_to']}): "
                    f"{'ok' if doc['oracle_check']['ok'] else 'FAILED'}\n"
                )
    return 0


def _homology_worker(item):
    path, cfg = item
    return homology_payload(load_and_check(path, cfg), cfg)


def _fan_out(worker, items, jobs: int):
    if jobs <= 1 or len(items) <= 1:
        return [worker(item) for item in items]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, items))


def cmd_homology(cfg: RunConfig, out) -> int:
    docs = _fan_out(
        _homology_worker, [(path, cfg) for path in cfg.inputs], cfg.jobs
    )
    if cfg.fmt == "json":
        out.write(
            json.dumps({"command": "homology", "results": docs}, sort_keys=True)
        )
        out.write("\n")
    else:
        for doc in docs:
            out.write(f"graph: {doc['graph']}\n")
            for line in doc["table_text"]:
                out.write(line + "\n")
            out.write(f"Frobenius series: {doc['frobenius']}\n")
    return 0


def load_and_check(path: str, cfg: RunConfig) -> VertexWeightedGraph:
    graph = load_graph_document(path)
    check_bounds(graph, cfg)
    return graph


def cmd_les(cfg: RunConfig, out) -> int:
    graph = load_and_check(cfg.inputs[0], cfg)
    if cfg.edge is None or not 0 <= cfg.edge < graph.m:
        raise SystemExit(f"--edge must name an edge index in 0..{graph.m - 1}")
    report = verify_les(graph, cfg.edge)
    if cfg.fmt == "json":
        out.write(json.dumps({"command": "les", "report": report.to_dict()},
                             sort_keys=True))
        out.write("\n")
    else:
        out.write(f"graph: {graph.serialize()}\n")
        out.write(f"edge: {cfg.edge}\n")
        out.write(f"all rows exact: {report.all_exact}\n")
        out.write(f"connecting-map description consistent: "
                  f"{report.snake_consistent}\n")
        for j, nodes in sorted(report.rows.items()):
            shown = [n for n in nodes if n.dim]
            out.write(f"row j={j}:\n")
            for n in shown:
                mods = " + ".join(
                    (f"{m}*" if m > 1 else "") + f"S[{','.join(map(str, lam))}]"
                    for lam, m in sorted(n.modules.items())
                ) or "0"
                out.write(
                    f"  H[{n.i},{j}]({n.part}) dim={n.dim} {mods} "
                    f"(rank in={n.rank_in}, out={n.rank_out}, "
                    f"exact={'yes' if n.exact else 'NO'})\n"
                )
    return 0


def cmd_verify(cfg: RunConfig, out) -> int:
    graphs = [load_and_check(path, cfg) for path in cfg.inputs]
    report = verify_structure_theorems(graphs, raise_on_failure=False)
    shuffle_results = []
    if cfg.shuffles:
        import random

        rng = random.Random(0)
        for graph in graphs:
            base = cached_table(graph)
            for _ in range(cfg.shuffles):
                order = list(range(graph.m))
                rng.shuffle(order)
                shuffled = graph.with_edge_order(tuple(order))
                same = cached_table(shuffled) == base
                shuffle_results.append(
                    {"graph": graph.serialize(), "order": order, "ok": same}
                )
    ok = report.ok and all(r["ok"] for r in shuffle_results)
    if cfg.fmt == "json":
        doc = {"command": "verify", "report": report.to_dict(),
               "shuffles": shuffle_results, "ok": ok}
        out.write(json.dumps(doc, sort_keys=True))
        out.write("\n")
    else:
        for r in report.results:
            if r.status != "SKIPPED":
                out.write(f"{r.status:7s} {r.check}  {r.graph}\n")
        for f in report.c6_findings:
            out.write(
                f"c6      n={f['vertices']} blocks={f['blocks']} "
                f"span0={f['span0']} lower-bound-holds={f['lower_bound_holds']}\n"
            )
        for r in shuffle_results:
            status = "PASS" if r["ok"] else "FAIL"
            out.write(f"{status:7s} edge-order-shuffle  {r['graph']}\n")
        out.write(f"overall: {'ok' if ok else 'FAILED'}\n")
    return 0 if ok else 1


def _connected_unit_graphs(max_vertices: int):
    from .graphs import state_profile

    seen = set()
    for n in range(1, max_vertices + 1):
        all_edges = list(combinations(range(n), 2))
        for mask in range(1 << len(all_edges)):
            edges = [all_edges[k] for k in range(len(all_edges)) if mask >> k & 1]
            graph = graph_from_weights([1] * n, edges)
            if len(state_profile(graph, (1 << graph.m) - 1).blocks) != 1:
                continue
            key = graph.serialize()
            if key in seen:
                continue
            seen.add(key)
            yield graph


def cmd_scan_c6(cfg: RunConfig, out) -> int:
    findings = []
    violations = []
    for graph in _connected_unit_graphs(cfg.max_vertices):
        table = cached_table(graph)
        s0 = span_zero(table)
        b = count_blocks(graph)
        n = graph.n
        upper_ok = s0 is not None and s0 <= n - 1 if graph.m >= 1 else True
        if not upper_ok:
            raise AssertionError(f"span bound theorem violated on {graph.serialize()}")
        lower_ok = s0 is not None and n - b <= s0
        finding = {
            "graph": graph.serialize(),
            "vertices": n,
            "edges": graph.m,
            "blocks": b,
            "span0": s0,
            "lower_bound_holds": lower_ok,
        }
        findings.append(finding)
        if not lower_ok:
            violations.append(finding)
    if cfg.fmt == "json":
        out.write(json.dumps(
            {"command": "scan-c6", "findings": findings,
             "lower_bound_violations": violations},
            sort_keys=True))
        out.write("\n")
    else:
        for f in findings:
            out.write(
                f"n={f['vertices']} m={f['edges']} blocks={f['blocks']} "
                f"span0={f['span0']} lower-bound-holds={f['lower_bound_holds']}\n"
            )
        out.write(
            f"scanned {len(findings)} graphs; "
            f"{len(violations)} lower-bound findings to report\n"
        )
    return 0


def _expected_segment_cells():
    return {
        (0, 0): {(2, 1): 1},
        (0, 1): {(1, 1, 1): 1},
        (1, 2): {(1, 1, 1): 1},
    }


def cmd_selftest(cfg: RunConfig, out) -> int:
    checks = []

    segment = graph_from_weights([1, 2], [(0, 1)])
    table = cached_table(segment)
    checks.append(("weighted segment homology table",
                   table.cells == _expected_segment_cells()))
    checks.append(("weighted segment Frobenius series",
                   frobenius_series(table).text()
                   == "s[2,1] - (q + q^2*t)*s[1,1,1]"))

    x = csf_state_sum(segment)
    checks.append(("weighted segment state sum",
                   x.text() == "-p[3] + p[2,1]"))
    loop = graph_from_weights([2], [(0, 0)])
    checks.append(("loop graph vanishing", csf_state_sum(loop).is_zero()
                   and not cached_table(loop).cells))

    p3 = path_graph([1, 1, 1])
    t3 = cached_table(p3)
    expected_p3 = {
        (0, 0): {(1, 1, 1): 1},
        (1, 1): {(2, 1): 1, (1, 1, 1): 2},
        (2, 2): {(1, 1, 1): 1},
    }
    checks.append(("three-vertex path homology table", t3.cells == expected_p3))

    report = verify_les(p3, 0)
    checks.append(("deletion-contraction rows exact", report.all_exact))
    solved = {}
    for j, nodes in report.rows.items():
        for i, mults in solve_quotient_from_row(nodes).items():
            if mults:
                solved[(i, j)] = mults
    checks.append(("rows solve to the contracted segment table",
                   solved == _expected_segment_cells()))

    failed = [name for name, ok in checks if not ok]
    for name, ok in checks:
        out.write(f"{'PASS' if ok else 'FAIL'}  {name}\n")
    out.write(f"selftest: {len(checks) - len(failed)}/{len(checks)} passed\n")
    return 1 if failed else 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromhom",
        description="Exact weighted chromatic symmetric homology engine",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, inputs="+"):
        if inputs:
            p.add_argument("inputs", nargs=inputs, help="graph document file(s)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--max-weight", type=int, default=DEFAULT_MAX_WEIGHT)
        p.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES)
        p.add_argument("--force", action="store_true",
                       help="acknowledge factorial blowup and lift the bounds")
        p.add_argument("--cache-dir", default=None)
        p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("csf", help="weighted chromatic symmetric function")
    common(p)
    p.add_argument("--oracle-check", type=int, default=None, metavar="K",
                   help="also verify against proper colorings with up to K colors")

    p = sub.add_parser("homology", help="homology table and Frobenius series")
    common(p)
    p.add_argument("--dump-matrices", default=None, metavar="DIR",
                   help="write differential matrices as coordinate triples")

    p = sub.add_parser("les", help="deletion-contraction long exact sequence")
    common(p, inputs=None)
    p.add_argument("inputs", nargs=1, help="graph document file")
    p.add_argument("--edge", type=int, required=True)

    p = sub.add_parser("verify", help="structure-theorem suite")
    common(p)
    p.add_argument("--shuffles", type=int, default=0,
                   help="also check edge-order invariance with K random shuffles")

    p = sub.add_parser("scan-c6", help="empirical span lower-bound scan")
    common(p, inputs=None)
    p.add_argument("--max-vertices", type=int, default=4)

    p = sub.add_parser("selftest", help="golden examples")
    common(p, inputs=None)
    return parser


def config_from_args(args) -> RunConfig:
    return RunConfig(
        command=args.command,
        inputs=list(getattr(args, "inputs", []) or []),
        fmt=args.format,
        max_weight=args.max_weight,
        max_edges=args.max_edges,
        force=args.force,
        cache_dir=args.cache_dir,
        jobs=args.jobs,
        edge=getattr(args, "edge", None),
        oracle_check=getattr(args, "oracle_check", None),
        shuffles=getattr(args, "shuffles", 0),
        max_vertices=getattr(args, "max_vertices", 4),
        dump_matrices=getattr(args, "dump_matrices", None),
    )


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    cfg = config_from_args(args)
    out = sys.stdout
    handlers = {
        "csf": cmd_csf,
        "homology": cmd_homology,
        "les": cmd_les,
        "verify": cmd_verify,
        "scan-c6": cmd_scan_c6,
        "selftest": cmd_selftest,
    }
    try:
        return handlers[cfg.command](cfg, out)
    except AssertionError as exc:
        print(f"ASSERTION FAILURE: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
