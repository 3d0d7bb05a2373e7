"""Command-line front end.

Every subcommand prints a short human-readable report on stdout.  With
``--json PATH`` the full result is also written as JSON (``-`` means
stdout, replacing the report).  Rationals appear as "p/q" strings.
Exit status: 0 on success, 1 on a domain error (reported as
{"error_kind", "detail"} on stderr), 2 on usage errors.
"""

import argparse
import json
import sys

from . import exactnum as ex
from .errors import SelfDualError


def _dump(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _emit(args, obj, text):
    path = getattr(args, "json", None)
    if path == "-":
        sys.stdout.write(_dump(obj))
        return
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    if path:
        with open(path, "w") as fh:
            fh.write(_dump(obj))


def _read_json(path):
    with open(path) as fh:
        return json.load(fh)


def _matrix_text(X):
    rows = [[ex.rational_str(x) for x in row] for row in X]
    width = max(len(s) for row in rows for s in row)
    return "\n".join("  ".join(s.rjust(width) for s in row) for row in rows)


def _vec(v):
    return [ex.rational_str(x) for x in v]


def _matroid_summary(M):
    out = {
        "ground_size": M.m,
        "rank": M.n,
        "basis_count": M.num_bases(),
        "nonbases": [list(b) for b in M.nonbases()],
        "canonical_id": M.canonical_id(),
        "simple": M.is_simple(),
        "connected": M.is_connected(),
    }
    if M.m == 2 * M.n:
        out["selfdual"] = M.is_selfdual()
        out["stable"] = out["selfdual"] and M.is_stable()
    return out


def _summary_text(s):
    lines = [f"rank {s['rank']} on {s['ground_size']} elements, {s['basis_count']} bases, "
             f"{len(s['nonbases'])} nonbases"]
    if "selfdual" in s:
        lines.append(f"self-dual: {s['selfdual']}  stable: {s['stable']}")
    lines.append(f"canonical id: {s['canonical_id']}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# handlers
# ---------------------------------------------------------------------------

def cmd_sample(args):
    from .config import config_to_json_obj, sample_selfdual
    X, L = sample_selfdual(args.n, args.seed)
    obj = {"configuration": config_to_json_obj(X), "witness": _vec(L), "seed": args.seed}
    _emit(args, obj, _matrix_text(X) + "\nwitness: " + " ".join(_vec(L)))
    return 0


def cmd_certify(args):
    from .config import config_from_json_obj, lambda_from_plucker, matroid_of, plucker, selfdual_certificate
    X = config_from_json_obj(_read_json(args.input))
    L = selfdual_certificate(X)
    lam = lambda_from_plucker(plucker(X))
    M = matroid_of(X)
    obj = {"certificate": None if L is None else _vec(L),
           "plucker_lambda": None if lam is None else _vec(lam),
           "matroid": _matroid_summary(M)}
    text = "certificate: " + ("none" if L is None else " ".join(_vec(L)))
    text += "\nPlücker lambda: " + ("none" if lam is None else " ".join(_vec(lam)))
    _emit(args, obj, text + "\n" + _summary_text(obj["matroid"]))
    return 0


def cmd_matroid(args):
    from .config import config_from_json_obj, matroid_of
    from .matroid import Matroid
    data = _read_json(args.input)
    M = matroid_of(config_from_json_obj(data)) if "columns" in data else Matroid.from_json_obj(data)
    s = _matroid_summary(M)
    _emit(args, s, _summary_text(s))
    return 0


def cmd_octad(args):
    from .config import config_from_json_obj, config_to_json_obj
    from .octad import gamma, reconstruct_matrix
    X7 = config_from_json_obj(_read_json(args.input))
    p = gamma(X7)
    Y = reconstruct_matrix(p, (0, 1, 2, 3))
    obj = {"plucker": {ex.subset_to_label(I): ex.rational_str(v) for I, v in p.items()},
           "octad": config_to_json_obj(Y)}
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(_dump(obj))
    _emit(args, obj, _matrix_text(Y))
    return 0


def _census_text(result):
    lines = []
    for g, s in sorted(result["summary"].items()):
        lines.append(f"genus {g}: {s['graphs']} graphs, {s['matroids']} matroids")
        for b, sizes in s["graphs_per_matroid"].items():
            lines.append(f"  {b} bases: " + ", ".join(str(k) for k in sizes))
    return "\n".join(lines)


def _run_census(args, g_min, g_max):
    from .graphcurve import census, census_csv
    result = census(g_min, g_max, args.seed, jobs=args.jobs)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(census_csv(result))
    obj = {"rows": result["rows"], "summary": {str(g): s for g, s in result["summary"].items()}}
    _emit(args, obj, _census_text(result))
    return 0


def cmd_graphcurve(args):
    if args.action == "census":
        lo = args.genus if args.genus is not None else args.genus_min
        hi = args.genus if args.genus is not None else args.genus_max
        if lo is None or hi is None:
            raise _Usage("graphcurve census needs --genus or both --genus-min and --genus-max")
        return _run_census(args, lo, hi)
    from .graphcurve import matroid_of_graph
    from .graphs import is_trivalent_3connected, parse_graph6
    from .errors import NotTrivalent
    G = parse_graph6(args.graph6)
    if not is_trivalent_3connected(G):
        raise NotTrivalent(f"{args.graph6} is not a 3-connected cubic graph")
    s = _matroid_summary(matroid_of_graph(G, args.seed))
    _emit(args, s, _summary_text(s))
    return 0


def cmd_census(args):
    return _run_census(args, args.genus_min, args.genus_max)


def cmd_classify(args):
    from .classify import close_under_complements, enumerate_selfdual
    from .matroid import Matroid
    if args.complete:
        if args.target is None:
            raise _Usage("--complete needs --target")
        found = {}
        for obj in _read_json(args.complete):
            M = Matroid.from_json_obj(obj)
            if M.m + 1 != args.target or 2 * M.n != args.target:
                continue
            N = close_under_complements(M)
            if N is not None and N.is_simple():
                C = N.canonical_form()
                found.setdefault(C.bits, C)
        ms = sorted(found.values(), key=lambda M: (len(M.nonbases()), M.bits))
    elif args.rank is not None:
        ms = enumerate_selfdual(args.rank, jobs=args.jobs)
    else:
        raise _Usage("classify needs --rank or --complete")
    obj = [_matroid_summary(M) for M in ms]
    lines = [f"{len(ms)} simple self-dual matroids"]
    for k, s in enumerate(obj):
        lines.append(f"  #{k}: {len(s['nonbases'])} nonbases, {s['basis_count']} bases, stable={s['stable']}")
    _emit(args, obj, "\n".join(lines))
    return 0


def cmd_tropical(args):
    from .tropical import TropicalPlucker, dressian_member, in_Lsd, selfdual_witness
    path = args.file or args.path
    if path is None:
        raise _Usage("tropical check needs a file (positional or --file)")
    q = TropicalPlucker.from_json_obj(_read_json(path))
    both = not (args.dressian or args.selfdual)
    obj, lines = {}, []
    if args.dressian or both:
        ok, why = dressian_member(q)
        obj["dressian"] = ok
        if why is not None:
            obj["violation"] = {
                "relation": [[ex.subset_to_label(a), ex.subset_to_label(b)] for a, b in why["relation"]],
                "values": [ex.tropical_str(v) for v in why["values"]],
            }
        lines.append(f"Dressian: {ok}")
    if args.selfdual or both:
        mu = selfdual_witness(q) if q.m == 2 * q.n else None
        obj["selfdual"] = mu is not None
        obj["witness"] = None if mu is None else _vec(mu)
        lines.append("self-dual: " + ("no" if mu is None else "yes, mu = " + " ".join(_vec(mu))))
        if q.m == 2 * q.n and all(v is not ex.INF for v in q.as_list()):
            obj["in_Lsd"] = in_Lsd(q)
    _emit(args, obj, "\n".join(lines))
    return 0


def cmd_mukai(args):
    from .mukai import evaluate_generators
    data = _read_json(args.point)
    point = data["point"] if isinstance(data, dict) else data
    vals = evaluate_generators(args.genus, point)
    obj = {"genus": args.genus, "values": _vec(vals), "vanishes": all(v == 0 for v in vals)}
    _emit(args, obj, f"{len(vals)} generators, all zero: {obj['vanishes']}")
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

class _Usage(Exception):
    pass


def build_parser():
    p = argparse.ArgumentParser(prog="selfdual", description="Self-dual configurations and matroids.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        sp.add_argument("--json", metavar="PATH", help="write the result as JSON ('-' for stdout)")
        return sp

    sp = add("sample", cmd_sample, "sample a self-dual configuration")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)

    sp = add("certify", cmd_certify, "self-duality certificate of a configuration")
    sp.add_argument("--input", required=True)

    sp = add("matroid", cmd_matroid, "matroid of a configuration or a matroid JSON file")
    sp.add_argument("--input", required=True)

    sp = add("octad", cmd_octad, "complete seven points to a Cayley octad")
    sp.add_argument("--input", required=True)
    sp.add_argument("--output")

    sp = add("graphcurve", cmd_graphcurve, "graph curve matroids")
    sp.add_argument("action", choices=["census", "matroid"])
    sp.add_argument("--genus", type=int)
    sp.add_argument("--genus-min", type=int)
    sp.add_argument("--genus-max", type=int)
    sp.add_argument("--graph6")
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--csv", metavar="PATH")

    sp = add("census", cmd_census, "graph curve census over a genus range")
    sp.add_argument("--genus-min", type=int, required=True)
    sp.add_argument("--genus-max", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--csv", metavar="PATH")

    sp = add("classify", cmd_classify, "simple self-dual matroids")
    sp.add_argument("--rank", type=int)
    sp.add_argument("--complete", metavar="FILE", help="JSON list of rank-n matroids on 2n-1 elements")
    sp.add_argument("--target", type=int, help="ground size 2n of the completed matroids")
    sp.add_argument("--jobs", type=int, default=1)

    sp = add("tropical", cmd_tropical, "tropical Plücker vector checks")
    sp.add_argument("action", choices=["check"])
    sp.add_argument("path", nargs="?")
    sp.add_argument("--file")
    sp.add_argument("--dressian", action="store_true")
    sp.add_argument("--selfdual", action="store_true")

    sp = add("mukai", cmd_mukai, "evaluate Mukai Grassmannian quadrics")
    sp.add_argument("action", choices=["eval"])
    sp.add_argument("--genus", type=int, required=True)
    sp.add_argument("--point", required=True, help="JSON list of coordinates or {\"point\": [...]}")
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Usage as exc:
        parser.error(str(exc))
    except SelfDualError as exc:
        sys.stderr.write(json.dumps(exc.as_dict(), sort_keys=True) + "\n")
        return 1
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        sys.stderr.write(json.dumps({"error_kind": type(exc).__name__, "detail": str(exc)}, sort_keys=True) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
