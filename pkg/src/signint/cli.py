"""Command-line entry point: ``signint <subcommand> [options]``.

Exit status: 0 on success, 1 on domain errors (unbalanced inputs are *not*
errors; NotInterval, bound overflows and the like are), 2 on parse or
configuration errors.  ``--format structured`` prints one JSON document with
keys ``command``, ``inputs``, ``result`` and ``timing``; ``timing`` is null
unless ``--timing`` is given, so repeated runs are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .chromatic import homomorphic_image_search, signed_chromatic_number
from .errors import ParseError, SignintError
from .gadgets import GadgetInstance, build_gadget, gadget_intervals, gadget_report
from .generators import random_interval_instance
from .graph import clique_number, parse_graph
from .intervals import format_intervals, graph_from_intervals, parse_intervals, recognize_interval_bruteforce
from .sclique import (
    SignedIntervalInstance,
    auxiliary_graph,
    max_s_clique_bruteforce,
    run_max_s_clique,
)
from .signature import min_signature_exact, min_signature_local_search
from .signed import (
    SignedGraph,
    format_signed_graph,
    is_balanced,
    parse_signed_graph,
    switching_witness,
)

SUBCOMMANDS = ("balance", "equiv", "sclique", "chroma", "minsig", "gadget", "recognize", "report")


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    subcommand: str
    graph: str | None = None
    other: str | None = None
    intervals: str | None = None
    sigma: str | None = None
    out_dir: str | None = None
    oracle_bound: int | None = None
    solver_bound: int | None = None
    seed: int = 0
    fmt: str = "human"
    timing: bool = False
    options: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.subcommand not in SUBCOMMANDS:
            raise ConfigError(f"unknown subcommand {self.subcommand!r}")
        for name in ("oracle_bound", "solver_bound"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ConfigError(f"--{name.replace('_', '-')} must be positive")
        if self.fmt not in ("human", "structured"):
            raise ConfigError("--format must be human or structured")


def _read(path: str | None, flag: str) -> str:
    if path is None:
        raise ConfigError(f"{flag} FILE is required")
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from None


def _load_signed(path, flag="--graph") -> SignedGraph:
    return parse_signed_graph(_read(path, flag))


def _edges(es) -> list:
    return [list(e) for e in sorted(es)]


def _run_balance(cfg):
    sg = _load_signed(cfg.graph)
    res = is_balanced(sg)
    inputs = {"graph": cfg.graph, "n": sg.n, "m": sg.ground.m}
    if res.balanced:
        return inputs, {"balanced": True, "side": sorted(res.side), "cycle": None}
    return inputs, {"balanced": False, "side": None, "cycle": list(res.cycle)}


def _run_equiv(cfg):
    a = _load_signed(cfg.graph)
    b = _load_signed(cfg.other, "--other")
    side = switching_witness(a, b)
    inputs = {"graph": cfg.graph, "other": cfg.other, "n": a.n}
    return inputs, {"equivalent": side is not None, "resign_set": None if side is None else sorted(side)}


def _load_instance(cfg) -> SignedIntervalInstance:
    rep = parse_intervals(_read(cfg.intervals, "--intervals"))
    ground = graph_from_intervals(rep)
    if cfg.graph is None:
        sg = SignedGraph(ground)
    else:
        sg = _load_signed(cfg.graph)
    return SignedIntervalInstance(sg, rep)


def _run_sclique(cfg):
    inst = _load_instance(cfg)
    inputs = {"intervals": cfg.intervals, "graph": cfg.graph, "n": inst.n, "oracle": cfg.options["oracle"]}
    if cfg.options["oracle"]:
        clique = max_s_clique_bruteforce(inst.sg, bound=cfg.oracle_bound)
        return inputs, {"method": "bruteforce", "clique": sorted(clique), "size": len(clique)}
    run = run_max_s_clique(inst)
    return inputs, {
        "method": "recursion",
        "clique": sorted(run.clique),
        "size": len(run.clique),
        "maximal_cliques": len(inst.mco),
        "claim_violations": [list(p) for p in run.violations],
        "repairs": run.repairs,
    }


def _run_chroma(cfg):
    sg = _load_signed(cfg.graph)
    k, coloring = signed_chromatic_number(sg, bound=cfg.solver_bound)
    inputs = {"graph": cfg.graph, "n": sg.n, "m": sg.ground.m}
    result = {
        "chi_s": k,
        "switching": sorted(coloring.switching),
        "colors": {str(v): c for v, c in enumerate(coloring.colors)},
        "hom_check": None,
    }
    if cfg.options["hom_check"]:
        if sg.n <= 8:
            order, witness = homomorphic_image_search(sg, bound=8)
            result["hom_check"] = {
                "status": "computed",
                "order": order,
                "agrees": order == k,
                "switching": sorted(witness.switching),
                "vertex_map": list(witness.vertex_map),
            }
        else:
            result["hom_check"] = {"status": "skipped", "reason": f"n = {sg.n} > 8"}
    return inputs, result


def _run_minsig(cfg):
    sg = _load_signed(cfg.graph)
    local = cfg.options["local_search"]
    res = min_signature_local_search(sg, seed=cfg.seed) if local else min_signature_exact(sg, bound=cfg.oracle_bound)
    inputs = {"graph": cfg.graph, "n": sg.n, "m": sg.ground.m, "method": "local-search" if local else "exact",
              "seed": cfg.seed if local else None}
    return inputs, {
        "resign_set": sorted(res.resign_set),
        "signature": _edges(res.min_signature),
        "size": res.size,
        "original_size": len(sg.signature),
        "certified_optimal": res.exact,
    }


def _parse_sigma(text: str) -> list:
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError("sigma line must be 'u v'", lineno)
        try:
            pairs.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", lineno) from None
    return pairs


def _run_gadget(cfg):
    n = cfg.options["n"]
    if n is None or n <= 1:
        raise ConfigError("--n must be an integer > 1")
    if cfg.graph:
        # analyse an existing (possibly edited) gadget file instead of building one
        if cfg.sigma:
            raise ConfigError("--graph and --sigma are mutually exclusive")
        rep = parse_intervals(_read(cfg.intervals, "--intervals")) if cfg.intervals else gadget_intervals(n)
        sg = _load_signed(cfg.graph)
        if sg.n != 3 * n or len(rep) != 3 * n:
            raise ConfigError(f"a gadget with --n {n} has {3 * n} vertices")
        inst = GadgetInstance(n, rep, sg)
    else:
        sigma = _parse_sigma(_read(cfg.sigma, "--sigma")) if cfg.sigma else []
        inst = build_gadget(n, sigma)
    inputs = {"n": n, "sigma": cfg.sigma, "negative_edges": _edges(inst.sg.signature)}
    result: dict = {"written": None, "report": None}
    if cfg.out_dir:
        out = Path(cfg.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        ivf = out / f"gadget_n{n}.intervals"
        sgf = out / f"gadget_n{n}.signed"
        ivf.write_text(format_intervals(inst.rep))
        sgf.write_text(format_signed_graph(inst.sg))
        result["written"] = {"intervals": str(ivf), "signed_graph": str(sgf)}
    if cfg.options["analyze"] or not cfg.out_dir:
        report = gadget_report(inst, solver_bound=cfg.solver_bound)
        result["report"] = report
        if not report["invariants_ok"]:
            failed = [k for k, ok in report["invariants"].items() if not ok]
            raise SignintError(f"gadget invariants failed: {failed}")
    return inputs, result


def _run_recognize(cfg):
    g = parse_graph(_read(cfg.graph, "--graph"))
    mco = recognize_interval_bruteforce(g, bound=cfg.options["clique_bound"])
    return {"graph": cfg.graph, "n": g.n, "m": g.m}, {
        "interval": True,
        "clique_ordering": [sorted(c) for c in mco.cliques],
    }


def _run_report(cfg):
    """Induced-subgraph S-clique oracle against the auxiliary clique number."""
    rng = random.Random(cfg.seed)
    count, max_n = cfg.options["instances"], cfg.options["max_n"]
    if count <= 0 or max_n < 2:
        raise ConfigError("--instances must be positive and --max-n at least 2")
    rows = []
    for i in range(count):
        n = rng.randint(2, max_n)
        inst = random_interval_instance(rng, n)
        oracle = max_s_clique_bruteforce(inst.sg, bound=cfg.oracle_bound)
        aux_size = clique_number(auxiliary_graph(inst.sg))
        run = run_max_s_clique(inst)
        rows.append({
            "instance": i,
            "n": n,
            "m": inst.sg.ground.m,
            "negative": len(inst.sg.signature),
            "oracle_size": len(oracle),
            "aux_clique": aux_size,
            "recursion_size": len(run.clique),
            "match": len(oracle) == aux_size,
        })
    mismatches = [r["instance"] for r in rows if not r["match"]]
    inputs = {"instances": count, "max_n": max_n, "seed": cfg.seed}
    return inputs, {"rows": rows, "mismatches": mismatches, "mismatch_count": len(mismatches)}


HANDLERS = {
    "balance": _run_balance,
    "equiv": _run_equiv,
    "sclique": _run_sclique,
    "chroma": _run_chroma,
    "minsig": _run_minsig,
    "gadget": _run_gadget,
    "recognize": _run_recognize,
    "report": _run_report,
}


def _human(command, result) -> str:
    lines = [f"[{command}]"]
    if command == "report":
        lines.append(f"{'inst':>4} {'n':>3} {'m':>3} {'oracle':>6} {'aux':>4} {'rec':>4}  match")
        for r in result["rows"]:
            lines.append(
                f"{r['instance']:>4} {r['n']:>3} {r['m']:>3} {r['oracle_size']:>6} "
                f"{r['aux_clique']:>4} {r['recursion_size']:>4}  {'yes' if r['match'] else 'NO'}"
            )
        lines.append(f"mismatches: {result['mismatch_count']}")
        return "\n".join(lines) + "\n"
    for key, value in result.items():
        if isinstance(value, dict):
            lines.append(f"{key}:")
            for k2, v2 in value.items():
                lines.append(f"  {k2}: {json.dumps(v2)}")
        else:
            lines.append(f"{key}: {json.dumps(value)}")
    return "\n".join(lines) + "\n"


def run(cfg: RunConfig, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    started = time.perf_counter()
    try:
        inputs, result = HANDLERS[cfg.subcommand](cfg)
    except (ParseError, ConfigError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except SignintError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return 1
    elapsed = time.perf_counter() - started
    if cfg.fmt == "structured":
        doc = {
            "command": cfg.subcommand,
            "version": __version__,
            "inputs": inputs,
            "result": result,
            "timing": {"seconds": round(elapsed, 6)} if cfg.timing else None,
        }
        stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        stdout.write(_human(cfg.subcommand, result))
        if cfg.timing:
            stdout.write(f"time: {elapsed:.3f}s\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", help="graph file (signed format unless noted)")
    common.add_argument("--intervals", help="interval file: 'label lo hi' per line")
    common.add_argument("--oracle-bound", type=int)
    common.add_argument("--solver-bound", type=int)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", dest="fmt", choices=("human", "structured"), default="human")
    common.add_argument("--timing", action="store_true", help="include wall-clock time in the output")

    parser = argparse.ArgumentParser(prog="signint", description="Signed interval graph algorithms.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    sub.add_parser("balance", parents=[common], help="balance test with witness")
    p = sub.add_parser("equiv", parents=[common], help="switching equivalence of two signed graphs")
    p.add_argument("--other", required=True)
    p = sub.add_parser("sclique", parents=[common], help="maximum S-clique of a signed interval graph")
    p.add_argument("--oracle", action="store_true", help="use the exhaustive induced-subgraph oracle")
    p = sub.add_parser("chroma", parents=[common], help="exact signed chromatic number")
    p.add_argument("--hom-check", action="store_true")
    p = sub.add_parser("minsig", parents=[common], help="minimum signature in the switching class")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", default=True)
    mode.add_argument("--local-search", action="store_true")
    p = sub.add_parser("gadget", parents=[common], help="build / analyse the hardness gadget")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sigma", help="file of K-internal negative edges 'u v' (0-based)")
    p.add_argument("--out-dir", help="write the interval and signed graph files here")
    p.add_argument("--analyze", action="store_true")
    p = sub.add_parser("recognize", parents=[common], help="exhaustive interval recognition (unsigned graph file)")
    p.add_argument("--clique-bound", type=int, default=None)
    p = sub.add_parser("report", parents=[common], help="S-clique correspondence table on random instances")
    p.add_argument("--instances", type=int, default=100)
    p.add_argument("--max-n", type=int, default=10)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    options = {
        "oracle": getattr(args, "oracle", False),
        "hom_check": getattr(args, "hom_check", False),
        "local_search": getattr(args, "local_search", False),
        "n": getattr(args, "n", None),
        "analyze": getattr(args, "analyze", False),
        "clique_bound": getattr(args, "clique_bound", None),
        "instances": getattr(args, "instances", 100),
        "max_n": getattr(args, "max_n", 10),
    }
    return RunConfig(
        subcommand=args.subcommand,
        graph=args.graph,
        other=getattr(args, "other", None),
        intervals=args.intervals,
        sigma=getattr(args, "sigma", None),
        out_dir=getattr(args, "out_dir", None),
        oracle_bound=args.oracle_bound,
        solver_bound=args.solver_bound,
        seed=args.seed,
        fmt=args.fmt,
        timing=args.timing,
        options=options,
    )


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
