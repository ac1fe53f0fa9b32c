"""Command-line front end: ``tgk <command> ...``.

Exit codes are shared by every command: 0 success, 1 input error,
2 semantic negative (not a travel groupoid, not multipartite, a failed
oracle check, ...), 3 refusal by the census guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import islice

from . import counting
from .enumeration import (
    BRUTEFORCE_MAX_ORDER,
    FILTERS,
    census_size,
    default_ceiling,
    enumerate_bruteforce,
    enumerate_nonconfusing,
    parallel_census,
)
from .errors import CensusTooLarge, NoTravelGroupoidError, TGKError
from .graph import (
    build_multipartite,
    classify_family,
    parse_graph,
    recognize_multipartite,
)
from .groupoid import (
    PREDICATES,
    Groupoid,
    associated_graph,
    classify,
    confusing_pairs,
    exchange_partners,
    format_table,
    holds,
    is_semi_smooth,
    is_simple,
    is_smooth,
    is_travel,
    iterate,
    maximal_associative_subgroupoids,
    parse_table,
    satisfies_tcm,
)
from .trees import (
    count_v_trees,
    enumerate_v_trees,
    family_from_groupoid,
    groupoid_from_family,
)

EXIT_OK, EXIT_INPUT, EXIT_NEGATIVE, EXIT_GUARD = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read(path):
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _sizes(text):
    try:
        sizes = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"bad part sizes {text!r}; expected e.g. 2,3") from None
    if not sizes or any(s < 1 for s in sizes):
        raise InputError(f"part sizes must be positive integers, got {text!r}")
    return sizes


def _graph_from_args(args):
    if getattr(args, "multipartite", None):
        return build_multipartite(_sizes(args.multipartite))[0], _sizes(args.multipartite)
    if not getattr(args, "graph", None):
        raise InputError("give a graph file or --multipartite sizes")
    G = parse_graph(_read(args.graph))
    rec = recognize_multipartite(G)
    return G, (list(rec.partition.sizes) if rec.ok else None)


def _yn(flag):
    return {True: "yes", False: "no", None: "n/a"}[flag]


def _fmt_set(s):
    return "{" + ",".join(map(str, sorted(s))) + "}"


def _emit_json(obj, out=None):
    out = out or sys.stdout
    out.write(json.dumps(obj, sort_keys=True) + "\n")


# classify ------------------------------------------------------------------

def cmd_classify(args):
    g = parse_table(_read(args.table))
    report = classify(g)
    G = associated_graph(g)
    rec = recognize_multipartite(G)
    family = classify_family(G)
    info = {
        "order": g.n,
        "report": report.to_dict(),
        "graph_edges": [list(e) for e in G.edge_list()],
        "family": family,
        "parts": [list(p) for p in rec.partition.parts] if rec.ok else None,
        "multipartite_witness": list(rec.witness) if rec.witness else None,
    }
    if report.travel:
        info["maximal_associative_subgroupoids"] = [
            list(c) for c in maximal_associative_subgroupoids(g)
        ]
        partners = exchange_partners(g)
        info["exchange_property"] = all(ws for pv in partners.values() for ws in pv.values())
        info["exchange_unique"] = all(len(ws) <= 1 for pv in partners.values() for ws in pv.values())

    if args.json:
        _emit_json(info)
    else:
        print(f"order: {g.n}")
        for name, flag in report.flags().items():
            line = f"{name}: {_yn(flag)}"
            if name in report.witnesses:
                line += " (witness " + " ".join(map(str, report.witnesses[name])) + ")"
            print(line)
        print("associated graph edges: " + (" ".join(f"{u}-{v}" for u, v in G.edge_list()) or "none"))
        if rec.ok:
            print(f"family: {family} (parts " + " ".join(_fmt_set(p) for p in rec.partition.parts) + ")")
        else:
            u, v, w = rec.witness
            print(f"family: {family} (edge {v}-{w}, vertex {u} adjacent to neither)")
        print("left units: " + (" ".join(map(str, report.left_units)) or "none"))
        if report.travel:
            print("maximal associative subgroupoids: "
                  + " ".join(_fmt_set(c) for c in info["maximal_associative_subgroupoids"]))
            print("confusing pairs: "
                  + (" ".join(f"({u},{v})" for u, v in report.confusing_pairs) or "none"))
            print(f"exchange property: {_yn(info['exchange_property'])}"
                  f" (unique partners: {_yn(info['exchange_unique'])})")
    return EXIT_OK if report.travel else EXIT_NEGATIVE


# count ---------------------------------------------------------------------

def cmd_count(args):
    sizes = _sizes(args.multipartite)
    try:
        travel = counting.count_travel_groupoids(sizes)
        simple = counting.count_simple_travel_groupoids(sizes)
    except NoTravelGroupoidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    if args.json:
        _emit_json({"sizes": sizes, "travel": str(travel), "simple": str(simple)})
    else:
        print(simple if args.simple else travel)
    return EXIT_OK


# enumerate -----------------------------------------------------------------

def _flags(g):
    return classify(g).flags()


def cmd_enumerate(args):
    G, _ = _graph_from_args(args)
    filters = []
    for item in args.filter or ():
        filters += [f for f in item.split(",") if f]
    for f in filters:
        if f not in PREDICATES:
            raise InputError(f"unknown filter {f!r}; choose from {', '.join(FILTERS)}")
    ceiling = args.max_census if args.max_census is not None else default_ceiling()

    if args.method == "bruteforce":
        if G.n > BRUTEFORCE_MAX_ORDER:
            print(f"error: brute force is limited to order {BRUTEFORCE_MAX_ORDER}", file=sys.stderr)
            return EXIT_GUARD
        stream = ((i, g) for i, g in enumerate(enumerate_bruteforce(G)))
        stream = ((i, g) for i, g in stream if all(holds(g, f) for f in filters))
    elif args.threads > 1:
        pairs = parallel_census(G, filters, workers=args.threads, ceiling=ceiling, force=args.force)
        stream = ((i, Groupoid._trusted(t)) for i, t in pairs)
    else:
        raw = enumerate(enumerate_nonconfusing(G, ceiling=ceiling, force=args.force))
        stream = ((i, g) for i, g in raw if all(holds(g, f) for f in filters))
    if args.limit is not None:
        stream = islice(stream, args.limit)

    out = open(args.out, "w") if args.out else sys.stdout
    count = 0
    try:
        for i, g in stream:
            count += 1
            if args.json:
                _emit_json({"index": i, "table": [list(r) for r in g.table], "flags": _flags(g)}, out)
            else:
                out.write(f"# groupoid {i}\n")
                out.write(format_table(g))
        if args.json:
            _emit_json({"count": count}, out)
        else:
            out.write(f"# count {count}\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


# recognize -----------------------------------------------------------------

def cmd_recognize(args):
    G = parse_graph(_read(args.graph))
    rec = recognize_multipartite(G)
    if args.json:
        _emit_json({
            "multipartite": rec.ok,
            "sizes": list(rec.partition.sizes) if rec.ok else None,
            "parts": [list(p) for p in rec.partition.parts] if rec.ok else None,
            "family": classify_family(G),
            "witness": list(rec.witness) if rec.witness else None,
        })
    elif rec.ok:
        print(",".join(map(str, rec.partition.sizes)))
        for p in rec.partition.parts:
            print(" ".join(map(str, p)))
    else:
        u, v, w = rec.witness
        print(f"not complete multipartite: witness {u} {v} {w} "
              f"(edge {v}-{w}, vertex {u} adjacent to neither)")
    return EXIT_OK if rec.ok else EXIT_NEGATIVE


# trees ---------------------------------------------------------------------

def cmd_trees(args):
    G, _ = _graph_from_args(args)
    if not 0 <= args.root < G.n:
        raise InputError(f"root {args.root} out of range 0..{G.n - 1}")
    if args.count_only:
        c = count_v_trees(G, args.root)
        if args.json:
            _emit_json({"root": args.root, "count": str(c)})
        else:
            print(c)
        return EXIT_OK
    trees = enumerate_v_trees(G, args.root)
    if args.json:
        _emit_json({
            "root": args.root,
            "count": str(len(trees)),
            "trees": [list(t.parent) for t in trees],
        })
    else:
        for t in trees:
            sys.stdout.write(t.to_text())
        print(f"# count {len(trees)}")
    return EXIT_OK


# oracle --------------------------------------------------------------------

def _oracle_checks(G, sizes, ceiling):
    """Yield ``(status, name, detail)`` with status PASS, FAIL or SKIP."""
    connected = G.is_connected()
    census = None

    if connected:
        bad = [v for v in range(G.n) if count_v_trees(G, v) != len(enumerate_v_trees(G, v))]
        yield ("FAIL" if bad else "PASS", "tree-counts",
               "matrix-tree vs enumeration" + (f", mismatch at {bad}" if bad else ""))
        if sizes is not None:
            part = recognize_multipartite(G).partition
            bad = []
            for v in range(G.n):
                p = part.part_of(v) + 1
                want = counting.count_S(part.sizes, p)
                if not (want == counting.count_S_closed(part.sizes, p) == count_v_trees(G, v)):
                    bad.append(v)
            yield ("FAIL" if bad else "PASS", "tree-formula",
                   "multinomial sum vs power form vs matrix-tree")
        total = census_size(G)
        if total > ceiling:
            yield ("SKIP", "census", f"predicted {total} groupoids exceeds ceiling {ceiling}")
        else:
            census = list(enumerate_nonconfusing(G, ceiling=ceiling))
            yield ("PASS" if len(set(census)) == len(census) == total else "FAIL",
                   "census-size", f"{len(census)} groupoids, {len(set(census))} distinct, predicted {total}")
            bad = 0
            for g in census:
                ok = (is_travel(g) and associated_graph(g) == G and not confusing_pairs(g)
                      and groupoid_from_family(family_from_groupoid(g)) == g)
                if sizes is not None:
                    ok = ok and satisfies_tcm(g) and is_semi_smooth(g) and all(
                        iterate(g, u, v, 2) == v for u in range(G.n) for v in range(G.n))
                bad += not ok
            yield ("FAIL" if bad else "PASS", "census-properties",
                   f"{bad} violations of travel/graph/non-confusing/round-trip"
                   + ("/tcm/semi-smooth/square" if sizes is not None else ""))
            if sizes is not None:
                travel = counting.count_travel_groupoids(sizes)
                yield ("PASS" if travel == len(census) else "FAIL", "travel-formula",
                       f"formula {travel}, census {len(census)}")
                simple = counting.count_simple_travel_groupoids(sizes)
                seen = sum(1 for g in census if is_simple(g))
                yield ("PASS" if simple == seen else "FAIL", "simple-formula",
                       f"formula {simple}, census {seen}")
                if max(sizes) <= 2:
                    smooth = sum(1 for g in census if is_smooth(g))
                    yield ("PASS" if smooth == len(census) else "FAIL", "all-smooth",
                           f"{smooth}/{len(census)} smooth (all parts have size <= 2)")
    else:
        yield ("SKIP", "census", "graph is disconnected")

    if G.n > BRUTEFORCE_MAX_ORDER:
        yield ("SKIP", "bruteforce", f"order {G.n} exceeds brute-force limit {BRUTEFORCE_MAX_ORDER}")
    elif census is None:
        brute = list(enumerate_bruteforce(G))
        yield ("PASS", "bruteforce", f"{len(brute)} travel groupoids (nothing to compare)")
    else:
        brute = set(enumerate_bruteforce(G))
        nonconf = {g for g in brute if not confusing_pairs(g)}
        same = nonconf == set(census)
        if sizes is not None:
            same = same and brute == set(census)
        yield ("PASS" if same else "FAIL", "bruteforce",
               f"{len(brute)} by table search, {len(nonconf)} non-confusing, {len(census)} by trees")


def cmd_oracle(args):
    G, sizes = _graph_from_args(args)
    if sizes is not None and len(sizes) == 1 and sizes[0] > 1:
        sizes = None
    ceiling = args.max_census if args.max_census is not None else default_ceiling()
    results = list(_oracle_checks(G, sizes, ceiling))
    failed = any(s == "FAIL" for s, _, _ in results)
    refused = any(s == "SKIP" and n == "census" and "ceiling" in d for s, n, d in results)
    if args.json:
        _emit_json({
            "checks": [{"status": s, "name": n, "detail": d} for s, n, d in results],
            "result": "FAIL" if failed else "PASS",
        })
    else:
        for s, n, d in results:
            print(f"{s} {n}: {d}")
        print("FAIL" if failed else "PASS")
    if failed:
        return EXIT_NEGATIVE
    return EXIT_GUARD if refused else EXIT_OK


# ---------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(prog="tgk", description="Travel groupoid toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_source(p):
        p.add_argument("graph", nargs="?", help="graph file ('n m' then 'u v' lines)")
        p.add_argument("--multipartite", metavar="N1,N2,...", help="use K_{N1,N2,...}")

    p = sub.add_parser("classify", help="evaluate every predicate on an operation table")
    p.add_argument("table", help="operation-table file, or - for stdin")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("count", help="closed-form census size on K_{n1,...,nl}")
    p.add_argument("--multipartite", required=True, metavar="N1,N2,...")
    p.add_argument("--simple", action="store_true", help="count simple travel groupoids only")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="stream every travel groupoid on a graph")
    graph_source(p)
    p.add_argument("--filter", action="append", metavar="NAME",
                   help=f"keep groupoids satisfying NAME ({', '.join(FILTERS)}); repeatable")
    p.add_argument("--limit", type=int)
    p.add_argument("--out", help="write the dump here instead of stdout")
    p.add_argument("--force", action="store_true", help="ignore the census ceiling")
    p.add_argument("--max-census", type=int, help="census ceiling (default $TGK_MAX_CENSUS or 10^7)")
    p.add_argument("--threads", type=int, default=1, help="worker processes; 1 keeps streaming order")
    p.add_argument("--method", choices=("tree", "bruteforce"), default="tree")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("recognize", help="recognize a complete multipartite graph")
    p.add_argument("graph")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("trees", help="list or count v-spanning trees")
    graph_source(p)
    p.add_argument("--root", type=int, required=True)
    p.add_argument("--count-only", action="store_true", help="matrix-tree count, no listing")
    p.set_defaults(func=cmd_trees)

    p = sub.add_parser("oracle", help="cross-check enumeration routes and formulas")
    graph_source(p)
    p.add_argument("--max-census", type=int)
    p.set_defaults(func=cmd_oracle)

    for p in sub.choices.values():
        p.add_argument("--json", action="store_true", help="machine-readable output")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CensusTooLarge as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (InputError, TGKError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
