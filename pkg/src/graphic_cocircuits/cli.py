"""Command-line front end.

Inputs are matrix files, graph files (taken as their bond matroid unless
--cycle is given), or catalog names such as R15*, M*(K35) or K44-.
Exit codes: 0 success, 1 precondition or bound failure (or a failed
verification), 2 usage error, 3 unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import catalog
from .errors import BoundExceeded, FormatError, GraphicCocircuitsError, PreconditionError
from .gf2 import format_matrix, parse_matrix
from .graph import (
    Multigraph,
    cycle_matroid,
    format_graph,
    parse_graph,
)
from .matroid import (
    DEFAULT_BOUND,
    BinaryMatroid,
    circuits,
    cocircuits,
    connectivity,
    dual,
    has_minor,
)
from .negami import negami_closure, verify_family_theorems
from .recognize import (
    decompose_1_2_sums,
    has_graphic_cocircuits,
    is_graphic,
    realize_graph,
    recognize_cographic,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3


class InputError(GraphicCocircuitsError):
    pass


# ------------------------------------------------------------------ inputs


def _looks_like_matrix(text: str) -> bool:
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#labels"):
            return True
        if line.startswith("#"):
            continue
        head = line.split()
        return len(head) == 2 and all(h.isdigit() for h in head)
    return False


def read_text(source: str) -> str | None:
    if source == "-":
        return sys.stdin.read()
    p = Path(source)
    if p.is_file():
        return p.read_text()
    return None


def load_graph(source: str) -> Multigraph:
    text = read_text(source)
    if text is None:
        try:
            return catalog.named_graph(source)
        except (KeyError, ValueError):
            raise InputError(f"no such file or catalog graph: {source}") from None
    return parse_graph(text)


def load_matroid(source: str, cycle: bool = False) -> BinaryMatroid:
    text = read_text(source)
    if text is None:
        try:
            return catalog.named_matroid(source)
        except (KeyError, ValueError):
            pass
        try:
            G = catalog.named_graph(source)
        except (KeyError, ValueError):
            raise InputError(f"no such file or catalog object: {source}") from None
        return cycle_matroid(G) if cycle else dual(cycle_matroid(G))
    if _looks_like_matrix(text):
        m, labels = parse_matrix(text)
        return BinaryMatroid.from_matrix(m, labels)
    M = cycle_matroid(parse_graph(text))
    return M if cycle else dual(M)


# ------------------------------------------------------------------ output


class Out:
    def __init__(self, fmt: str):
        self.fmt = fmt

    def emit(self, data, text: str) -> None:
        if self.fmt == "json":
            print(json.dumps(data, indent=2))
        else:
            sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _matrix_text(M: BinaryMatroid) -> str:
    return format_matrix(M.rep, M.elements)


def _family_text(fam) -> str:
    return "\n".join(" ".join(c) for c in fam)


def _graph_json(G: Multigraph) -> dict:
    return {
        "vertices": list(G.vertices),
        "edges": [{"label": e.label, "kind": e.kind, "ends": list(e.vertices)} for e in G.edges],
    }


# ---------------------------------------------------------------- commands


def cmd_rank(a, out):
    M = load_matroid(a.input, a.cycle)
    out.emit({"rank": M.rank, "elements": M.size}, str(M.rank))


def cmd_circuits(a, out):
    M = load_matroid(a.input, a.cycle)
    fam = circuits(M, bound=a.bound)
    out.emit({"circuits": [list(c) for c in fam]}, _family_text(fam))


def cmd_cocircuits(a, out):
    M = load_matroid(a.input, a.cycle)
    fam = cocircuits(M, bound=a.bound)
    out.emit({"cocircuits": [list(c) for c in fam]}, _family_text(fam))


def cmd_dual(a, out):
    D = dual(load_matroid(a.input, a.cycle))
    out.emit({"elements": list(D.elements), "matrix": D.rep.to_lists()}, _matrix_text(D))


def cmd_minor_test(a, out):
    M = load_matroid(a.input, a.cycle)
    N = load_matroid(a.minor, a.cycle)
    w = has_minor(M, N, bound=a.bound)
    if w is None:
        out.emit({"minor": False}, "no minor")
        return
    data = {"minor": True, "deleted": list(w.deleted), "contracted": list(w.contracted),
            "mapping": dict(sorted(w.mapping.items()))}
    out.emit(data, f"minor found\ndelete: {' '.join(w.deleted)}\ncontract: {' '.join(w.contracted)}")


def cmd_connectivity(a, out):
    k = connectivity(load_matroid(a.input, a.cycle), bound=a.bound)
    val = None if k == math.inf else int(k)
    out.emit({"connectivity": val, "infinite": val is None}, "inf" if val is None else str(val))


def cmd_graphic_test(a, out):
    ok, cert = is_graphic(load_matroid(a.input, a.cycle), bound=a.bound)
    data = {"graphic": ok, "certificate": None if cert is None else cert.as_dict()}
    text = "graphic" if ok else f"not graphic: {cert.name} minor\ndelete: {' '.join(cert.deleted)}\ncontract: {' '.join(cert.contracted)}"
    out.emit(data, text)


def cmd_cocircuit_audit(a, out):
    audit = has_graphic_cocircuits(load_matroid(a.input, a.cycle), bound=a.bound)
    rows = [{"cocircuit": list(y), "graphic": ok, "certificate": None if c is None else c.as_dict()}
            for y, ok, c in audit.ledger]
    lines = [f"{'graphic    ' if ok else 'NON-GRAPHIC'} {' '.join(y)}" for y, ok, _ in audit.ledger]
    lines.append(f"all graphic: {str(audit.graphic).lower()}")
    out.emit({"graphic_cocircuits": audit.graphic, "ledger": rows}, "\n".join(lines))


def cmd_decompose(a, out):
    parts = decompose_1_2_sums(load_matroid(a.input, a.cycle), bound=a.bound)
    data = {"components": [{"elements": list(p.elements), "matrix": p.rep.to_lists()} for p in parts]}
    out.emit(data, "\n".join(_matrix_text(p) for p in parts))


def cmd_realize(a, out):
    H = realize_graph(load_matroid(a.input, a.cycle), bound=a.bound)
    out.emit(_graph_json(H), format_graph(H))


def cmd_recognize(a, out):
    rep = recognize_cographic(load_matroid(a.input, a.cycle), check_preconditions=a.check_preconditions,
                              bound=a.bound)
    data = rep.as_dict(with_timings=a.timings)
    lines = [rep.decision]
    for c in rep.components:
        fam = "no family match" if c.family is None else f"matches {c.family}"
        lines.append(f"component {' '.join(c.matroid.elements)}: {fam}")
    out.emit(data, "\n".join(lines))


def cmd_catalog(a, out):
    name = a.name
    if a.as_ == "graph":
        G = load_graph(name)
        out.emit(_graph_json(G), format_graph(G))
        return
    try:
        G = catalog.named_graph(name)
    except (KeyError, ValueError):
        G = None
    if G is not None:
        M = cycle_matroid(G) if a.as_ == "cycle-matrix" else dual(cycle_matroid(G))
    else:
        M = load_matroid(name)
        if a.as_ == "bond-matrix":
            M = dual(M)
    out.emit({"elements": list(M.elements), "matrix": M.rep.to_lists()}, _matrix_text(M))


def cmd_negami_closure(a, out):
    seed = load_graph(a.seed)
    entries = negami_closure(seed, a.max_edges)
    manifest = []
    for i, entry in enumerate(entries):
        item = {"index": i, "edges": entry.edges, "vertices": len(entry.graph.vertices),
                "steps": [s.as_dict() for s in entry.steps]}
        if a.out_dir:
            fname = f"graph_{i:04d}.txt"
            item["file"] = fname
        manifest.append(item)
    if a.out_dir:
        d = Path(a.out_dir)
        d.mkdir(parents=True, exist_ok=True)
        for item, entry in zip(manifest, entries):
            (d / item["file"]).write_text(format_graph(entry.graph))
        (d / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")
    text = "\n".join(f"{m['index']}: {m['vertices']} vertices, {m['edges']} edges, "
                     f"{len(m['steps'])} steps" for m in manifest)
    out.emit({"count": len(entries), "graphs": manifest}, text)


def _verify_obstruction_cocircuits(a, out) -> int:
    results = {}
    for name in ("M*(G17)", "M*(G19)"):
        audit = has_graphic_cocircuits(catalog.named_matroid(name), bound=a.bound)
        results[name] = {"cocircuits": len(audit.ledger), "all_graphic": audit.graphic}
    ok = all(r["all_graphic"] for r in results.values())
    msg = ("PASS: all cocircuit deletions graphic for M*(G17), M*(G19)" if ok
           else "FAIL: some cocircuit deletion is not graphic")
    out.emit({"check": "lemma31", "pass": ok, "results": results}, msg)
    return EXIT_OK if ok else EXIT_FAIL


def _verify_r15_r16(a, out) -> int:
    results = {}
    for name in ("R15*", "R16*"):
        audit = has_graphic_cocircuits(catalog.named_matroid(name), bound=a.bound, stop_early=True)
        bad = audit.non_graphic
        results[name] = None if not bad else {"cocircuit": list(bad[0][0]), "certificate": bad[0][1].as_dict()}
    ok = all(v is not None for v in results.values())
    lines = []
    for name, r in results.items():
        if r is None:
            lines.append(f"{name}: no non-graphic cocircuit found")
        else:
            c = r["certificate"]
            lines.append(f"{name}: deleting {' '.join(r['cocircuit'])} leaves an {c['minor']} minor "
                         f"(delete {' '.join(c['deleted']) or '-'}; contract {' '.join(c['contracted']) or '-'})")
    lines.insert(0, "PASS: R15* and R16* each have a non-graphic cocircuit" if ok else "FAIL")
    out.emit({"check": "thm34", "pass": ok, "results": results}, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


def _verify_families(a, out) -> int:
    rep = verify_family_theorems(a.n_max, a.edge_budget)
    lines = [("PASS" if rep.ok else "FAIL") + ": family characterizations on the closures",
             f"members checked: {', '.join(rep.members_checked)}"]
    for seed, size in rep.closure_sizes.items():
        lines.append(f"closure of {seed}: {size} graphs, members {', '.join(rep.closure_members[seed])}")
    for c in rep.counterexamples:
        lines.append(f"counterexample: {json.dumps(c)}")
    out.emit({"check": "families", "pass": rep.ok, **rep.as_dict()}, "\n".join(lines))
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_verify(a, out):
    return {"lemma31": _verify_obstruction_cocircuits, "thm34": _verify_r15_r16, "families": _verify_families}[a.what](a, out)


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--bound", type=int, default=DEFAULT_BOUND,
                        help="element bound for exhaustive searches (default %(default)s)")
    common.add_argument("--cycle", action="store_true",
                        help="read graph input as its cycle matroid instead of its bond matroid")

    p = argparse.ArgumentParser(prog="graphic-cocircuits", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True, metavar="verb")

    def verb(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(fn=fn)
        return sp

    for name, fn, help_ in (
        ("rank", cmd_rank, "rank of a matroid"),
        ("circuits", cmd_circuits, "list circuits"),
        ("cocircuits", cmd_cocircuits, "list cocircuits"),
        ("dual", cmd_dual, "representation of the dual"),
        ("connectivity", cmd_connectivity, "Tutte connectivity"),
        ("graphic-test", cmd_graphic_test, "graphicness via the two cographic excluded minors"),
        ("cocircuit-audit", cmd_cocircuit_audit, "graphicness of M minus each cocircuit"),
        ("decompose", cmd_decompose, "split into 3-connected pieces along 1- and 2-sums"),
        ("realize", cmd_realize, "graph whose cycle matroid is the input"),
    ):
        verb(name, fn, help_).add_argument("input")

    sp = verb("minor-test", cmd_minor_test, "search for an N-minor of M")
    sp.add_argument("input")
    sp.add_argument("minor")

    sp = verb("recognize", cmd_recognize, "decide signed-graphicness of a cographic matroid")
    sp.add_argument("input")
    sp.add_argument("--check-preconditions", action="store_true")
    sp.add_argument("--timings", action="store_true", help="include wall-clock timings in JSON output")

    sp = verb("catalog", cmd_catalog, "export a catalog object")
    sp.add_argument("name")
    sp.add_argument("--as", dest="as_", choices=("graph", "cycle-matrix", "bond-matrix"), default="cycle-matrix")

    sp = verb("negami-closure", cmd_negami_closure, "O1/O2 closure of a seed graph")
    sp.add_argument("seed")
    sp.add_argument("--max-edges", type=int, required=True)
    sp.add_argument("--out-dir")

    sp = verb("verify", cmd_verify, "run a verification harness")
    sp.add_argument("what", choices=("lemma31", "thm34", "families"))
    sp.add_argument("--n-max", type=int, default=6)
    sp.add_argument("--edge-budget", type=int, default=17)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    out = Out(a.format)
    try:
        rc = a.fn(a, out)
    except (InputError, FormatError, OSError) as exc:
        print(f"error: input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BoundExceeded as exc:
        print(f"error: bound: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except PreconditionError as exc:
        print(f"error: precondition: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except GraphicCocircuitsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK if rc is None else rc


if __name__ == "__main__":
    sys.exit(main())
