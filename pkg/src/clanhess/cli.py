"""Command-line front end.

Examples::

    clanhess clans enumerate --p 1 --q 1
    clanhess clans stats +1+-2+21
    clanhess poset weak --p 3 --q 3 --interval --format dot
    clanhess poset inclusion --p 2 --q 1 --format json
    clanhess wset --p 3 --q 3 123
    clanhess wset-bijection --p 3 213
    clanhess class --p 3 --q 3 123
    clanhess hess classify --p 2 --q 2
    clanhess hess report --p 2 --q 2 1,3,4,4
    clanhess hess dim --p 3 213
    clanhess monk 1 123 --p 3 --q 3
    clanhess scan multfree --p 2 --q 2
    clanhess verify all

Wherever a clan is expected, a one-line permutation w of length q may be
given instead and names the interval clan gamma_w (this is unambiguous:
clan strings contain signs or repeated labels, one-line permutations never
do).  Clan strings starting with ``-`` need the usual ``--`` separator,
e.g. ``clanhess clans stats -- -+``.

Exit codes: 0 success, 1 validation error, 2 verification failure.
All emitted sets are sorted (clans by symbol string, permutations by
length then one-line notation) so output is diffable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import verify as verify_mod
from .clans import (
    Clan,
    clan_sort_key,
    clan_to_json,
    enumerate_clans,
    gamma_w,
    interval_clans,
    orbit_dimension,
    parse_clan,
    render_clan,
    statistics,
)
from .hessenberg import (
    area,
    classify_irreducibles,
    hess_dimension,
    hess_orbit_report,
    is_hessenberg_vector,
    m_of_w,
)
from .perms import (
    Permutation,
    factorization_pairs,
    parse_permutation,
    phi,
    render_permutation,
    render_word,
)
from .schubert import SchubertExpansion, brion_class, monk_product
from .weak_order import build_graph, graph_to_dot, graph_to_json, w_set, w_set_via_bijection


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; the contract wants 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _perm_sort_key(w: Permutation):
    return (w.length(), w.key)


def _compact(w: Permutation, n: int | None = None) -> str:
    images = w.embedded(n).images if n is not None else w.images
    if max(images, default=1) <= 9:
        return "".join(str(v) for v in images)
    return render_permutation(w, n)


def _clan_argument(text: str, p: int | None, q: int | None) -> Clan:
    """Dual parse: a one-line permutation of length q names gamma_w."""
    stripped = text.strip()
    if stripped and all(ch.isdigit() and ch != "0" for ch in stripped):
        letters = tuple(int(ch) for ch in stripped)
        if sorted(letters) == list(range(1, len(letters) + 1)):
            if q is not None and len(letters) != q:
                raise ValueError(f"permutation {stripped!r} has length {len(letters)}, expected q={q}")
            if p is None:
                raise ValueError("interval clan gamma_w needs --p")
            return gamma_w(Permutation(letters), p)
    return parse_clan(stripped, p, q)


def _parse_vector(text: str) -> tuple[int, ...]:
    text = text.strip()
    if "," in text:
        return tuple(int(s) for s in text.split(","))
    if text.isdigit():
        return tuple(int(ch) for ch in text)
    raise ValueError(f"bad Hessenberg vector {text!r}: expected 1,3,4,4 or compact digits")


def _validated_shape(args) -> tuple[int, int]:
    p, q = args.p, args.q
    if p is None or q is None:
        raise ValueError("this command needs both --p and --q")
    if not 1 <= q <= p:
        raise ValueError(f"need p >= q >= 1, got p={p}, q={q}")
    return p, q


# ---------------------------------------------------------------------------
# subcommand handlers, each returning (exit_code, lines)
# ---------------------------------------------------------------------------


def _cmd_clans(args) -> tuple[int, list[str]]:
    if args.clans_command == "enumerate":
        p, q = _validated_shape(args)
        clans = sorted(enumerate_clans(p, q), key=clan_sort_key)
        if args.format == "json":
            return 0, [json.dumps([clan_to_json(c) for c in clans])]
        return 0, [render_clan(c) for c in clans]
    clan = _clan_argument(args.clan, args.p, args.q)
    st = statistics(clan)
    if args.format == "json":
        payload = clan_to_json(clan)
        payload.update(
            plus_counts=list(st.plus_counts),
            minus_counts=list(st.minus_counts),
            pair_matrix=[list(row) for row in st.pair_matrix],
            dimension=orbit_dimension(clan),
        )
        return 0, [json.dumps(payload)]
    lines = [
        f"clan: {render_clan(clan)}  (p={clan.p}, q={clan.q})",
        "plus:  " + " ".join(str(v) for v in st.plus_counts),
        "minus: " + " ".join(str(v) for v in st.minus_counts),
        "pairs:",
    ]
    lines.extend("  " + " ".join(str(v) for v in row) for row in st.pair_matrix)
    lines.append(f"dimension: {orbit_dimension(clan)}")
    return 0, lines


def _inclusion_hasse(nodes: list[Clan]) -> list[tuple[Clan, Clan]]:
    from .clans import inclusion_leq

    size = len(nodes)
    up = [0] * size
    for i, a in enumerate(nodes):
        for j, b in enumerate(nodes):
            if inclusion_leq(a, b):
                up[i] |= 1 << j
    down = [0] * size
    for i in range(size):
        for j in range(size):
            if (up[j] >> i) & 1:
                down[i] |= 1 << j
    covers = []
    for i in range(size):
        rest = up[i] & ~(1 << i)
        while rest:
            j = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            if up[i] & down[j] == (1 << i) | (1 << j):
                covers.append((nodes[i], nodes[j]))
    return covers


def _cmd_poset(args) -> tuple[int, list[str]]:
    p, q = _validated_shape(args)
    if args.order == "weak":
        graph = build_graph(p, q, interval_only=args.interval)
        text = graph_to_dot(graph) if args.format == "dot" else graph_to_json(graph)
        return 0, [text]
    nodes = sorted(
        interval_clans(p, q) if args.interval else enumerate_clans(p, q),
        key=clan_sort_key,
    )
    covers = _inclusion_hasse(nodes)
    if args.format == "json":
        payload = {
            "p": p,
            "q": q,
            "order": "inclusion",
            "interval": args.interval,
            "nodes": [render_clan(c) for c in nodes],
            "covers": [
                {"source": render_clan(a), "target": render_clan(b)} for a, b in covers
            ],
        }
        return 0, [json.dumps(payload)]
    lines = ["digraph inclusion {"]
    lines.extend(f'  "{render_clan(c)}";' for c in nodes)
    lines.extend(f'  "{render_clan(a)}" -> "{render_clan(b)}";' for a, b in covers)
    lines.append("}")
    return 0, ["\n".join(lines)]


def _cmd_wset(args) -> tuple[int, list[str]]:
    clan = _clan_argument(args.clan, args.p, args.q)
    elements = sorted(w_set(clan), key=_perm_sort_key)
    if args.format == "json":
        payload = [
            {"word": list(x.reduced_word()), "one_line": list(x.key)} for x in elements
        ]
        return 0, [json.dumps(payload)]
    return 0, [render_word(x.reduced_word()) for x in elements]


def _cmd_wset_bijection(args) -> tuple[int, list[str]]:
    w = parse_permutation(args.w)
    if args.p is None:
        raise ValueError("wset-bijection needs --p")
    q = w.degree
    p = args.p
    if not 1 <= q <= p:
        raise ValueError(f"need p >= q >= 1, got p={p}, q={q}")
    n = p + q
    pairs = sorted(
        factorization_pairs(w * Permutation.longest(q)),
        key=lambda uv: (_perm_sort_key(uv[0]), _perm_sort_key(uv[1])),
    )
    rows = []
    for u, v in pairs:
        x = u * phi(v, n)
        rows.append((u, v, x))
    if args.format == "json":
        payload = [
            {
                "u": list(u.key),
                "v": list(v.key),
                "element": list(x.key),
                "word": list(x.reduced_word()),
            }
            for u, v, x in rows
        ]
        return 0, [json.dumps(payload)]
    lines = [
        f"{render_permutation(u, q)} * phi({render_permutation(v, q)}) = {render_word(x.reduced_word())}"
        for u, v, x in rows
    ]
    lines.append(f"|W| = {len(rows)}")
    return 0, lines


def _cmd_class(args) -> tuple[int, list[str]]:
    clan = _clan_argument(args.clan, args.p, args.q)
    expansion = brion_class(clan)
    if args.format == "json":
        return 0, [json.dumps(expansion.to_json())]
    return 0, [expansion.render(n=clan.n)]


def _cmd_hess(args) -> tuple[int, list[str]]:
    if args.hess_command == "classify":
        p, q = _validated_shape(args)
        table = classify_irreducibles(p, q)
        rows = sorted(table.items(), key=lambda wm: _perm_sort_key(wm[0]))
        if args.format == "json":
            return 0, [
                json.dumps({_compact(w, q): list(m) for w, m in rows})
            ]
        return 0, [
            f"{_compact(w, q)} -> {','.join(str(v) for v in m)}" for w, m in rows
        ]
    if args.hess_command == "report":
        p, q = _validated_shape(args)
        m = _parse_vector(args.m)
        if not is_hessenberg_vector(m, p + q):
            raise ValueError(f"{m} is not a Hessenberg vector for n={p + q}")
        rep = hess_orbit_report(p, q, m)
        if args.format == "json":
            return 0, [json.dumps(rep.to_json())]
        lines = [
            f"m = {','.join(str(v) for v in rep.m)}  (p={p}, q={q})",
            f"contained orbits: {len(rep.contained)}",
            "maximal: " + " ".join(render_clan(c) for c in sorted(rep.maximal, key=clan_sort_key)),
            f"irreducible: {'yes' if rep.irreducible else 'no'}",
        ]
        if rep.witness is not None:
            lines.append(f"witness: {_compact(rep.witness, q)}")
            lines.append(f"dimension: {area(m)}")
        return 0, lines
    # hess dim <w>
    w = parse_permutation(args.w)
    if args.p is None:
        raise ValueError("hess dim needs --p")
    p = args.p
    m = m_of_w(w, p)
    lines = [
        f"m(w) = {','.join(str(v) for v in m)}",
        f"dimension: {hess_dimension(w, p)}  (= area {area(m)})",
    ]
    return 0, lines


def _cmd_monk(args) -> tuple[int, list[str]]:
    clan = _clan_argument(args.clan, args.p, args.q)
    expansion = brion_class(clan)
    n = clan.n
    if args.stable:
        product = monk_product(args.m, expansion)
        rendered = product.render()
    else:
        product = monk_product(args.m, expansion, n=n)
        rendered = product.render(n=n)
    if args.format == "json":
        return 0, [json.dumps(product.to_json())]
    return 0, [rendered]


def _cmd_scan(args) -> tuple[int, list[str]]:
    p, q = _validated_shape(args)
    n = p + q
    max_m = args.max_m if args.max_m is not None else n - 1
    cache: dict = {}
    lines = []
    products = 0
    violations = 0
    for clan in sorted(enumerate_clans(p, q), key=clan_sort_key):
        expansion = SchubertExpansion({x: 1 for x in w_set(clan, cache)})
        for m in range(1, min(max_m, n - 1) + 1):
            products += 1
            product = monk_product(m, expansion, n=n)
            bad = {w: c for w, c in product.coeffs.items() if c != 1}
            if bad:
                violations += 1
                worst = max(bad.values())
                lines.append(
                    f"multiplicity {worst} at clan {render_clan(clan)}, m={m}"
                )
    if violations == 0:
        lines.append(
            f"no multiplicity >= 2 in {products} divisor products at (p,q)=({p},{q})"
        )
    else:
        lines.append(f"{violations} of {products} products carry multiplicity >= 2")
    return 0, lines


_VERIFY_TARGETS = {
    "oracle": ("geometric-oracle",),
    "wsets": ("w-set-bijection",),
    "monk": ("monk-products",),
    "irreducible": ("irreducible-classification",),
}


def _cmd_verify(args) -> tuple[int, list[str]]:
    max_n = args.max_n
    seed = args.seed

    def run(name: str) -> verify_mod.CheckResult:
        if name == "irreducible-classification":
            return verify_mod.irreducibility_checks(max_total=max_n)
        if name == "geometric-oracle":
            # rank scans above total 6 are out of the supported envelope
            return verify_mod.oracle_checks(max_total=min(max_n, 6), seed=seed)
        table = dict(verify_mod.CRITERIA)
        return table[name]()

    names = [name for name, _ in verify_mod.CRITERIA]
    selected = names if args.target == "all" else list(_VERIFY_TARGETS[args.target])
    workers = int(os.environ.get("CLANHESS_THREADS", "1"))
    if workers > 1 and len(selected) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, selected))
    else:
        results = [run(name) for name in selected]
    lines = [
        verify_mod.format_result(res, names.index(name) + 1)
        for name, res in zip(selected, results)
    ]
    status = 0 if all(res.passed for res in results) else 2
    return status, lines


# ---------------------------------------------------------------------------
# parser assembly
# ---------------------------------------------------------------------------


def _build_parser() -> _Parser:
    parser = _Parser(prog="clanhess", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, formats=("text", "json"), shape=True):
        sp.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
        if formats:
            sp.add_argument("--format", choices=formats, default=formats[0])
        if shape:
            sp.add_argument("--p", type=int, help="number of + signs")
            sp.add_argument("--q", type=int, help="number of - signs")

    clans = sub.add_parser("clans", help="enumerate clans or print statistics")
    clans_sub = clans.add_subparsers(dest="clans_command", required=True)
    en = clans_sub.add_parser("enumerate", help="all clans of shape (p, q)")
    common(en)
    stats = clans_sub.add_parser("stats", help="invariants of one clan")
    stats.add_argument("clan", help="clan string, e.g. +1+-2+21")
    common(stats)

    poset = sub.add_parser("poset", help="inclusion or weak order as DOT/JSON")
    poset.add_argument("order", choices=("inclusion", "weak"))
    poset.add_argument("--interval", action="store_true", help="restrict to interval clans")
    common(poset, formats=("dot", "json"))

    wset = sub.add_parser("wset", help="W-set of a clan (or gamma_w)")
    wset.add_argument("clan", help="clan string, or one-line w of length q")
    common(wset)

    bij = sub.add_parser("wset-bijection", help="W-set via length-additive factorizations")
    bij.add_argument("w", help="one-line permutation, e.g. 213 or [2,1,3]")
    common(bij)

    cls = sub.add_parser("class", help="cohomology class of an orbit closure")
    cls.add_argument("clan", help="clan string, or one-line w of length q")
    common(cls)

    hess = sub.add_parser("hess", help="Hessenberg classification commands")
    hess_sub = hess.add_subparsers(dest="hess_command", required=True)
    cl = hess_sub.add_parser("classify", help="all irreducible vectors m(w)")
    common(cl)
    rp = hess_sub.add_parser("report", help="orbit decomposition of one vector")
    rp.add_argument("m", help="Hessenberg vector, e.g. 1,3,4,4 or 1344")
    common(rp)
    dm = hess_sub.add_parser("dim", help="dimension of the variety of m(w)")
    dm.add_argument("w", help="231-avoiding one-line permutation")
    common(dm, formats=())

    monk = sub.add_parser("monk", help="divisor product S_{s_m} * class")
    monk.add_argument("m", type=int, help="divisor index, 1 <= m < n")
    monk.add_argument("clan", help="clan string, or one-line w of length q")
    monk.add_argument("--stable", action="store_true", help="no truncation to S_n")
    common(monk)

    scan = sub.add_parser("scan", help="exploratory scans")
    scan_sub = scan.add_subparsers(dest="scan_command", required=True)
    mf = scan_sub.add_parser("multfree", help="search divisor products for multiplicity >= 2")
    mf.add_argument("--max-m", type=int, default=None, help="largest divisor index to try")
    common(mf, formats=())

    ver = sub.add_parser("verify", help="run verification criteria")
    ver.add_argument("target", choices=("all", "oracle", "wsets", "monk", "irreducible"))
    ver.add_argument("--max-n", type=int, default=7, help="largest p + q for exhaustive scans")
    ver.add_argument("--seed", type=int, default=0, help="seed for randomized spot checks")
    ver.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    return parser


_HANDLERS = {
    "clans": _cmd_clans,
    "poset": _cmd_poset,
    "wset": _cmd_wset,
    "wset-bijection": _cmd_wset_bijection,
    "class": _cmd_class,
    "hess": _cmd_hess,
    "monk": _cmd_monk,
    "scan": _cmd_scan,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        status, lines = _HANDLERS[args.command](args)
    except ValueError as exc:
        print(f"clanhess: error: {exc}", file=sys.stderr)
        return 1
    text = "\n".join(lines)
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    elif text:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
