"""Command-line interface.

Check subcommands encode their verdict in the exit code: 0 = yes,
1 = no, 2 = error (bad input, I/O failure, or an oracle/characterization
disagreement under ``--method both``).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import dyck as D
from . import formats as F
from . import multisun as M
from . import recognition as R
from . import words as W
from .graph_core import Graph, Hole
from .matrix import (
    OddCycleCertificate,
    clique_matrix,
    intersection_graph,
    is_balanced,
    is_conformal,
    is_linear,
    min_odd_cycle_order,
    up_matrix,
)

SCHEMA = 1


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _graph_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def _hole_json(h: Hole) -> dict:
    return {"vertices": list(h.vertices), "length": len(h)}


def _cert_json(c: OddCycleCertificate) -> dict:
    return {
        "order": c.order,
        "rows": list(c.row_indices),
        "cols": list(c.col_indices),
    }


def _multisun_json(m: M.Multisun) -> dict:
    return {
        "order": m.order,
        "rim": list(m.rim),
        "cliques": [sorted(c) for c in m.cliques],
        "hub": m.hub,
    }


def _verdict_json(v: R.Verdict) -> dict:
    out: dict = {"decision": v.decision, "method": v.method}
    if v.witness_kind:
        out["witness_kind"] = v.witness_kind
    if v.hole:
        out["hole"] = _hole_json(v.hole)
    if v.sunoid:
        out["sunoid"] = _multisun_json(v.sunoid)
    if v.sunword:
        out["sunword"] = F.render_word(v.sunword)
    if v.core_vertices is not None:
        out["core_vertices"] = list(v.core_vertices)
    if v.certificate:
        out["certificate"] = _cert_json(v.certificate)
    if v.detail:
        out["detail"] = v.detail
    return out


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        payload = {"schema": SCHEMA, **payload}
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif text:
        print(text)


def _path_json(p: M.PathReport) -> dict:
    return {
        "kind": p.kind,
        "endpoints": list(p.endpoints),
        "vertices": list(p.vertices),
        "cliques": list(p.cliques),
    }


def _ncond_json(rep: M.NConditionReport) -> dict:
    out: dict = {
        "n1": rep.n1,
        "n2": rep.n2,
        "n3": rep.n3,
        "n4": rep.n4,
        "n5": rep.n5,
        "hub": rep.hub,
        "all_pass": rep.all_pass,
    }
    for name in ("n1", "n4", "n5"):
        w = getattr(rep, f"{name}_witness")
        if w is not None:
            out[f"{name}_witness"] = _path_json(w)
    if rep.n2_witness is not None:
        out["n2_witness"] = rep.n2_witness
    if rep.n3_witness is not None:
        out["n3_witness"] = list(rep.n3_witness)
    return out


# --- graph commands ---------------------------------------------------------


def _cmd_graph_check_balanced(args) -> int:
    g = F.parse_graph(_read(args.file))
    v = R.balanced_df(g, args.method)
    _emit(args, {"command": "graph check-balanced", **_verdict_json(v)},
          "balanced" if v.decision else f"unbalanced ({v.detail})")
    return 0 if v.decision else 1


def _cmd_graph_witness(args) -> int:
    g = F.parse_graph(_read(args.file))
    try:
        v = R.find_unbalanced_witness(g)
    except ValueError as exc:
        if "balanced input" in str(exc):
            _emit(args, {"command": "graph witness", "witness": None},
                  "balanced: no witness")
            return 1
        raise
    if args.dot and v.sunoid is not None:
        print(F.graph_to_dot(v.sunoid.graph, v.sunoid), end="")
        return 0
    text = f"{v.witness_kind} on vertices {list(v.core_vertices or ())}"
    if v.sunword is not None:
        text += f", sunword {F.render_word(v.sunword)}"
    _emit(args, {"command": "graph witness", **_verdict_json(v)}, text)
    return 0


def _cmd_graph_clique_perfect(args) -> int:
    g = F.parse_graph(_read(args.file))
    rep = R.is_clique_perfect(g)
    payload = {
        "command": "graph clique-perfect",
        "tau": rep.tau,
        "alpha": rep.alpha,
        "clique_perfect": rep.clique_perfect,
    }
    if rep.failing_vertices is not None:
        payload["failing_vertices"] = list(rep.failing_vertices)
        payload["failing_tau"] = rep.failing_tau
        payload["failing_alpha"] = rep.failing_alpha
    text = (
        f"clique-perfect (tau_c={rep.tau}, alpha_c={rep.alpha})"
        if rep.clique_perfect
        else f"not clique-perfect: tau_c={rep.failing_tau} != alpha_c={rep.failing_alpha} "
        f"on {list(rep.failing_vertices or ())}"
    )
    _emit(args, payload, text)
    return 0 if rep.clique_perfect else 1


def _cmd_graph_min_unbalanced(args) -> int:
    g = F.parse_graph(_read(args.file))
    v = R.is_minimally_unbalanced_df(g)
    if args.method in ("oracle", "both"):
        truth = R.is_minimally_unbalanced_oracle(g)
        if args.method == "oracle":
            v = R.Verdict(truth, "oracle")
        elif truth != v.decision:
            raise R.DisagreementError(
                f"oracle says {truth}, characterization says {v.decision}"
            )
    _emit(args, {"command": "graph min-unbalanced", **_verdict_json(v)},
          "minimally unbalanced" if v.decision else f"not minimally unbalanced ({v.detail})")
    return 0 if v.decision else 1


# --- matrix commands --------------------------------------------------------


def _cmd_matrix_check(args) -> int:
    m = F.parse_matrix(_read(args.file))
    res = min_odd_cycle_order(m)
    payload: dict = {
        "command": "matrix check",
        "rows": m.nrows,
        "cols": m.ncols,
        "linear": is_linear(m),
        "conformal": is_conformal(m),
        "balanced": res is None,
    }
    if res is not None:
        order, cert = res
        payload["min_odd_cycle_order"] = order
        payload["certificate"] = _cert_json(cert)
        text = f"unbalanced: odd cycle submatrix of order {order}"
    else:
        text = "balanced"
    _emit(args, payload, text)
    return 0 if res is None else 1


def _cmd_matrix_upmatrix(args) -> int:
    m = F.parse_matrix(_read(args.file))
    up, kept = up_matrix(m)
    if args.json:
        _emit(args, {"command": "matrix upmatrix",
                     "kept_rows": list(kept),
                     "matrix": [up.row_list(i) for i in range(up.nrows)]}, "")
    else:
        print(F.render_matrix(up), end="")
    return 0


def _cmd_matrix_intersection(args) -> int:
    m = F.parse_matrix(_read(args.file))
    g = intersection_graph(m)
    if args.json:
        _emit(args, {"command": "matrix intersection", "graph": _graph_json(g)}, "")
    else:
        print(F.render_graph(g), end="")
    return 0


# --- multisun commands ------------------------------------------------------


def _cmd_multisun_recognize(args) -> int:
    g = F.parse_graph(_read(args.file))
    m = M.recognize_multisun(g)
    if m is None:
        reason = M.why_not_multisun(g)
        _emit(args, {"command": "multisun recognize", "multisun": None,
                     "reason": reason}, f"not a multisun: {reason}")
        return 1
    if args.dot:
        print(F.graph_to_dot(g, m), end="")
        return 0
    _emit(args, {"command": "multisun recognize", "multisun": _multisun_json(m)},
          f"multisun: rim {list(m.rim)}, cliques {[sorted(c) for c in m.cliques]}, hub {m.hub}")
    return 0


def _require_multisun(g: Graph) -> M.Multisun:
    m = M.recognize_multisun(g)
    if m is None:
        raise ValueError(f"not a multisun: {M.why_not_multisun(g)}")
    return m


def _cmd_multisun_nconditions(args) -> int:
    m = _require_multisun(F.parse_graph(_read(args.file)))
    rep = M.check_n_conditions(m)
    verdicts = ", ".join(
        f"N-{i}={'n/a' if v is None else ('pass' if v else 'fail')}"
        for i, v in enumerate((rep.n1, rep.n2, rep.n3, rep.n4, rep.n5), start=1)
    )
    _emit(args, {"command": "multisun nconditions", **_ncond_json(rep)}, verdicts)
    return 0 if rep.all_pass else 1


def _cmd_multisun_encode(args) -> int:
    m = _require_multisun(F.parse_graph(_read(args.file)))
    word = W.word_of_multisun(m)
    _emit(args, {"command": "multisun encode", "word": F.render_word(word)},
          F.render_word(word))
    return 0


def _cmd_multisun_standardize(args) -> int:
    m = _require_multisun(F.parse_graph(_read(args.file)))
    std = M.standardize(m)
    if args.dot:
        print(F.graph_to_dot(std.graph, std), end="")
    elif args.json:
        _emit(args, {"command": "multisun standardize",
                     "multisun": _multisun_json(std),
                     "graph": _graph_json(std.graph)}, "")
    else:
        print(F.render_graph(std.graph), end="")
    return 0


# --- word commands ----------------------------------------------------------


def _cmd_word_check(args) -> int:
    c = W.canonicalize(F.parse_word(args.word))
    rep = W.is_sunword(c)
    payload: dict = {
        "command": "word check",
        "canonical": F.render_word(c),
        "sunword": rep.ok,
        "s_word": rep.s_word.ok,
    }
    if not rep.ok:
        payload["reason"] = rep.reason
    if rep.s_word.ok:
        payload["form"] = rep.s_word.form
        payload["run_letters"] = [W.letter_char(t) for t in rep.s_word.run_letters]
        payload["run_exponents"] = list(rep.s_word.run_exponents)
    if rep.ranking:
        payload["order"] = [W.letter_char(t) for t in rep.ranking]
    text = "sunword" if rep.ok else f"not a sunword ({rep.reason})"
    _emit(args, payload, text)
    return 0 if rep.ok else 1


def _cmd_word_realize(args) -> int:
    c = W.canonicalize(F.parse_word(args.word))
    m = W.standard_multisun(c)
    if args.dot:
        print(F.graph_to_dot(m.graph, m), end="")
    elif args.json:
        _emit(args, {"command": "word realize", "multisun": _multisun_json(m),
                     "graph": _graph_json(m.graph)}, "")
    else:
        print(F.render_graph(m.graph), end="")
    return 0


def _cmd_word_project(args) -> int:
    c = W.canonicalize(F.parse_word(args.word))
    drop = set()
    for ch in args.drop.replace(",", ""):
        if not ("a" <= ch <= "z"):
            raise ValueError(f"bad letter {ch!r} in drop set")
        drop.add(W.proper_letter(ord(ch) - ord("a")))
    out = W.project(c, drop)
    _emit(args, {"command": "word project", "word": F.render_word(out)},
          F.render_word(out))
    return 0


def _cmd_word_order(args) -> int:
    c = W.canonicalize(F.parse_word(args.word))
    try:
        ranking = W.induced_order(c)
    except W.OrderUndefinedError as exc:
        x, y = exc.pair
        _emit(args, {"command": "word order", "order": None,
                     "tie": [W.letter_char(x), W.letter_char(y)]},
              f"order undefined: {W.letter_char(x)} and {W.letter_char(y)} tie")
        return 1
    text = " < ".join(W.letter_char(t) for t in ranking)
    _emit(args, {"command": "word order",
                 "order": [W.letter_char(t) for t in ranking]}, text)
    return 0


# --- dyck commands ----------------------------------------------------------


def _cmd_dyck_enumerate(args) -> int:
    ws = D.enumerate_dyck(args.n)
    if args.json:
        _emit(args, {"command": "dyck enumerate", "n": args.n,
                     "count": len(ws), "words": [w.steps for w in ws]}, "")
    else:
        for w in ws:
            print(w.steps)
    return 0


def _cmd_dyck_of_word(args) -> int:
    c = W.canonicalize(F.parse_word(args.word))
    wd = D.sunword_to_dyck(c)
    steps = D.path_to_word(wd.path).steps
    if args.json:
        _emit(args, {"command": "dyck of-word", "steps": steps,
                     "heights": list(wd.path.heights),
                     "weights": list(wd.weights)}, "")
    else:
        print(steps)
        print(" ".join(str(w) for w in wd.weights))
    return 0


def _cmd_dyck_to_word(args) -> int:
    path = D.word_to_path(D.DyckWord(args.steps))
    weights = tuple(int(x) for x in args.weights.split(","))
    c = D.dyck_to_sunword(D.WeightedDyckPath(path, weights))
    _emit(args, {"command": "dyck to-word", "word": F.render_word(c)},
          F.render_word(c))
    return 0


# --- enumeration / corpus ---------------------------------------------------


def _cmd_enumerate_min_unbalanced(args) -> int:
    graphs = R.enumerate_min_unbalanced(args.order)
    if args.json:
        _emit(args, {"command": "enumerate min-unbalanced", "max_order": args.order,
                     "count": len(graphs),
                     "graphs": [_graph_json(g) for g in graphs]}, "")
    else:
        for g in graphs:
            m = M.recognize_multisun(g)
            if m is None:
                print(f"odd hole C_{g.n}")
            else:
                word = W.word_of_multisun(m)
                print(f"multisun n={g.n} word={F.render_word(word)} "
                      f"cliques={[sorted(c) for c in m.cliques]}")
    return 0


def _cmd_corpus_generate(args) -> int:
    from . import corpus as C

    if args.kind == "multisuns":
        items = C.random_multisuns(args.seed, args.count)
        graphs = [m.graph for m in items]
    else:
        sizes = range(5, args.max_order + 1)
        per = max(1, args.count // len(list(sizes)))
        graphs = C.diamond_free_corpus(args.seed, range(5, args.max_order + 1), per)
        graphs = graphs[: args.count]
    if args.json:
        _emit(args, {"command": "corpus generate", "seed": args.seed,
                     "count": len(graphs),
                     "graphs": [_graph_json(g) for g in graphs]}, "")
    else:
        for i, g in enumerate(graphs):
            if i:
                print("---")
            print(F.render_graph(g), end="")
    return 0


# --- parser -----------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="balcheck",
        description="Balancedness checks and minimally unbalanced diamond-free"
        " graph tooling: matrices, multisuns, sunwords, Dyck paths.",
    )
    sub = ap.add_subparsers(dest="group", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="emit a JSON report")

    g = sub.add_parser("graph", help="graph checks").add_subparsers(
        dest="cmd", required=True
    )
    p = g.add_parser("check-balanced", help="is the diamond-free graph balanced?")
    p.add_argument("file", help="graph file ('-' for stdin)")
    p.add_argument("--method", choices=["oracle", "algorithm", "both"],
                   default="oracle")
    add_json(p)
    p.set_defaults(func=_cmd_graph_check_balanced)
    p = g.add_parser("witness", help="extract a minimally unbalanced witness")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true", help="emit DOT for a sunoid witness")
    add_json(p)
    p.set_defaults(func=_cmd_graph_witness)
    p = g.add_parser("clique-perfect", help="transversal/independence equality, hereditary")
    p.add_argument("file")
    add_json(p)
    p.set_defaults(func=_cmd_graph_clique_perfect)
    p = g.add_parser("min-unbalanced", help="is the graph minimally unbalanced?")
    p.add_argument("file")
    p.add_argument("--method", choices=["characterization", "oracle", "both"],
                   default="characterization")
    add_json(p)
    p.set_defaults(func=_cmd_graph_min_unbalanced)

    mx = sub.add_parser("matrix", help="0/1-matrix checks").add_subparsers(
        dest="cmd", required=True
    )
    p = mx.add_parser("check", help="balancedness, linearity, conformality")
    p.add_argument("file")
    add_json(p)
    p.set_defaults(func=_cmd_matrix_check)
    p = mx.add_parser("upmatrix", help="submatrix of the non-dominated rows")
    p.add_argument("file")
    add_json(p)
    p.set_defaults(func=_cmd_matrix_upmatrix)
    p = mx.add_parser("intersection", help="column intersection graph")
    p.add_argument("file")
    add_json(p)
    p.set_defaults(func=_cmd_matrix_intersection)

    ms = sub.add_parser("multisun", help="multisun certificates").add_subparsers(
        dest="cmd", required=True
    )
    p = ms.add_parser("recognize", help="certify rim and inscribed cliques")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true")
    add_json(p)
    p.set_defaults(func=_cmd_multisun_recognize)
    p = ms.add_parser("nconditions", help="check the five inscription conditions")
    p.add_argument("file")
    add_json(p)
    p.set_defaults(func=_cmd_multisun_nconditions)
    p = ms.add_parser("encode", help="cyclic word of the rim labeling")
    p.add_argument("file")
    add_json(p)
    p.set_defaults(func=_cmd_multisun_encode)
    p = ms.add_parser("standardize", help="contract to the minimal representative")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true")
    add_json(p)
    p.set_defaults(func=_cmd_multisun_standardize)

    wd = sub.add_parser("word", help="word calculus").add_subparsers(
        dest="cmd", required=True
    )
    p = wd.add_parser("check", help="sunword decision with full report")
    p.add_argument("word")
    add_json(p)
    p.set_defaults(func=_cmd_word_check)
    p = wd.add_parser("realize", help="standard multisun of an s-word")
    p.add_argument("word")
    p.add_argument("--dot", action="store_true")
    add_json(p)
    p.set_defaults(func=_cmd_word_realize)
    p = wd.add_parser("project", help="set letters to blanks")
    p.add_argument("word")
    p.add_argument("--drop", required=True, help="letters to drop, e.g. 'ab'")
    add_json(p)
    p.set_defaults(func=_cmd_word_project)
    p = wd.add_parser("order", help="induced letter order")
    p.add_argument("word")
    add_json(p)
    p.set_defaults(func=_cmd_word_order)

    dk = sub.add_parser("dyck", help="Dyck paths and the sunword bijection").add_subparsers(
        dest="cmd", required=True
    )
    p = dk.add_parser("enumerate", help="all Dyck words of a semilength")
    p.add_argument("-n", type=int, required=True)
    add_json(p)
    p.set_defaults(func=_cmd_dyck_enumerate)
    p = dk.add_parser("of-word", help="weighted Dyck path of a sunword")
    p.add_argument("word")
    add_json(p)
    p.set_defaults(func=_cmd_dyck_of_word)
    p = dk.add_parser("to-word", help="sunword of a weighted Dyck path")
    p.add_argument("steps", help="e.g. LRLLRR")
    p.add_argument("weights", help="comma separated, one per path point")
    add_json(p)
    p.set_defaults(func=_cmd_dyck_to_word)

    en = sub.add_parser("enumerate", help="enumerate structures").add_subparsers(
        dest="cmd", required=True
    )
    p = en.add_parser("min-unbalanced", help="all minimally unbalanced diamond-free graphs")
    p.add_argument("--order", type=int, required=True, help="maximum order")
    add_json(p)
    p.set_defaults(func=_cmd_enumerate_min_unbalanced)

    co = sub.add_parser("corpus", help="seeded random corpora").add_subparsers(
        dest="cmd", required=True
    )
    p = co.add_parser("generate", help="emit a reproducible corpus")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--kind", choices=["graphs", "multisuns"], default="graphs")
    p.add_argument("--max-order", type=int, default=10, dest="max_order")
    add_json(p)
    p.set_defaults(func=_cmd_corpus_generate)

    return ap


def run(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except R.DisagreementError as exc:
        print(f"DISAGREEMENT: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
