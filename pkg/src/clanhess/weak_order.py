"""The weak order on clans and the W-sets that expand orbit-closure classes.

Covers are generated by local moves on the charged-matching picture of a
clan, always at a pair of adjacent vertices (i, i+1):

* IA1 / IA2 -- switch the endpoint of a strand with an adjacent charge so
  that the strand gets longer;
* IB  -- turn two disjoint strands ending/starting at i, i+1 into a
  crossing;
* IC1 / IC2 -- uncross two crossing strands at consecutive left (IC1) or
  right (IC2) endpoints, producing a nested pair;
* II  -- replace adjacent opposite charges by a length-one strand.

At most one move applies at a given position pair.  A cover carries the
label s_i of the position where the move happened; several labels can point
at the same target clan.  Following labels along any path up to the dense
clan and multiplying the corresponding simple reflections yields the W-set
of a clan, whose elements index the Schubert classes in the expansion of
the orbit-closure cohomology class.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .clans import (
    Clan,
    clan_sort_key,
    dense_clan,
    enumerate_clans,
    gamma_w,
    interval_clans,
    render_clan,
)
from .perms import Permutation, symmetric_group

__all__ = [
    "LabeledCover",
    "WeakOrderGraph",
    "covers_from",
    "build_graph",
    "w_set",
    "w_set_via_bijection",
    "interval_iso_check",
    "graph_to_dot",
    "graph_to_json",
]

MOVE_TYPES = ("IA1", "IA2", "IB", "IC1", "IC2", "II")


@dataclass(frozen=True)
class LabeledCover:
    """A covering relation source < target with its move labels.

    labels[k] is a position i, meaning the move happened at (i, i+1) and
    the cover is labeled by the simple reflection s_i; move_types[k] names
    the move that produced it.
    """

    source: Clan
    target: Clan
    labels: tuple[int, ...]
    move_types: tuple[str, ...]


def _move_at(partner: dict[int, int], charge: dict[int, str], i: int):
    """Apply the unique move at positions (i, i+1) if one exists.

    Returns (new_arcs, new_charges, move_type) or None.  partner maps each
    matched position to its mate; charge maps signed positions to +/-.
    """
    a, b = i, i + 1
    arcs = {tuple(sorted((x, y))) for x, y in partner.items() if x < y}

    def rebuilt(drop, add, charge_updates):
        new_arcs = (arcs - set(drop)) | set(add)
        new_charge = {pos: sgn for pos, sgn in charge.items() if pos not in (a, b)}
        new_charge.update(charge_updates)
        return new_arcs, new_charge

    if a in charge and b in charge:
        if charge[a] != charge[b]:
            return rebuilt((), [(a, b)], {}) + ("II",)
        return None
    if a in partner and b in charge:
        j = partner[a]
        if j < a:
            return rebuilt([(j, a)], [(j, b)], {a: charge[b]}) + ("IA1",)
        return None
    if a in charge and b in partner:
        k = partner[b]
        if k > b:
            return rebuilt([(b, k)], [(a, k)], {b: charge[a]}) + ("IA2",)
        return None
    if a in partner and b in partner and partner[a] != b:
        j, k = partner[a], partner[b]
        if j < a and k > b:
            return rebuilt([(j, a), (b, k)], [(j, b), (a, k)], {}) + ("IB",)
        if j > b and k > b and j < k:
            return rebuilt([(a, j), (b, k)], [(a, k), (b, j)], {}) + ("IC1",)
        if j < a and k < a and j < k:
            return rebuilt([(j, a), (k, b)], [(k, a), (j, b)], {}) + ("IC2",)
        return None
    return None


def covers_from(clan: Clan) -> tuple[LabeledCover, ...]:
    """All weak-order covers of a clan, merged by target."""
    partner: dict[int, int] = {}
    for (i, j) in clan.arcs:
        partner[i] = j
        partner[j] = i
    charge = dict(clan.charges)
    by_target: dict[Clan, list[tuple[int, str]]] = {}
    for i in range(1, clan.n):
        hit = _move_at(partner, charge, i)
        if hit is None:
            continue
        new_arcs, new_charge, move = hit
        symbols: list = [None] * clan.n
        for pos, sgn in new_charge.items():
            symbols[pos - 1] = sgn
        for label, (x, y) in enumerate(sorted(new_arcs), 1):
            symbols[x - 1] = symbols[y - 1] = label
        by_target.setdefault(Clan(symbols), []).append((i, move))
    covers = []
    for target in sorted(by_target, key=clan_sort_key):
        moves = sorted(by_target[target])
        covers.append(
            LabeledCover(
                clan,
                target,
                tuple(i for i, _ in moves),
                tuple(mv for _, mv in moves),
            )
        )
    return tuple(covers)


@dataclass(frozen=True)
class WeakOrderGraph:
    """The labeled cover digraph of the weak order on (p,q)-clans."""

    p: int
    q: int
    interval_only: bool
    nodes: tuple[Clan, ...]
    covers: tuple[LabeledCover, ...]

    def covers_of(self, clan: Clan) -> tuple[LabeledCover, ...]:
        return tuple(c for c in self.covers if c.source == clan)


def build_graph(p: int, q: int, interval_only: bool = False) -> WeakOrderGraph:
    """Cover digraph on all (p,q)-clans, or on the q! interval clans only."""
    nodes = interval_clans(p, q) if interval_only else enumerate_clans(p, q)
    node_set = set(nodes)
    covers: list[LabeledCover] = []
    for clan in nodes:
        for cov in covers_from(clan):
            if cov.target not in node_set:
                raise RuntimeError(
                    f"cover leaves the node set: {clan} -> {cov.target}"
                )
            covers.append(cov)
    return WeakOrderGraph(p, q, interval_only, nodes, covers)


def w_set(clan: Clan, _cache: dict | None = None) -> frozenset[Permutation]:
    """All products s_{i1} * ... * s_{il} over label sequences of paths from
    the clan up to the dense clan.

    >>> sorted(w.reduced_word() for w in w_set(Clan("+-")))
    [(1,)]
    """
    cache: dict[Clan, frozenset[Permutation]] = _cache if _cache is not None else {}

    def rec(c: Clan) -> frozenset[Permutation]:
        got = cache.get(c)
        if got is not None:
            return got
        covers = covers_from(c)
        if not covers:
            if c != dense_clan(c.p, c.q):
                raise RuntimeError(f"non-dense clan with no covers: {c}")
            result = frozenset({Permutation.identity(1)})
        else:
            acc = set()
            for cov in covers:
                sub = rec(cov.target)
                for i in cov.labels:
                    s = Permutation.simple(i)
                    acc.update(s * x for x in sub)
            result = frozenset(acc)
        cache[c] = result
        return result

    return rec(clan)


def w_set_via_bijection(w: Permutation, p: int) -> frozenset[Permutation]:
    """W-set of gamma_w computed from length-additive factorizations:
    { u * phi(v) : w*y0 = u*v with additive lengths }, phi in S_{p+q}."""
    from .perms import factorization_pairs, phi

    q = w.degree
    n = p + q
    target = w * Permutation.longest(q)
    return frozenset(u * phi(v, n) for u, v in factorization_pairs(target))


def interval_iso_check(p: int, q: int) -> bool:
    """Verify that w -> gamma_w is an isomorphism from the two-sided weak
    order on S_q onto the interval clans, cover for cover, with left covers
    by s_i turning into IC1 moves labeled s_i and right covers by s_i into
    IC2 moves labeled s_{i+p}."""
    for w in symmetric_group(q):
        expected: dict[Clan, set[tuple[int, str]]] = {}
        inv = w.inverse()
        for i in range(1, q):
            if inv(i) < inv(i + 1):
                target = gamma_w(Permutation.simple(i, q) * w, p)
                expected.setdefault(target, set()).add((i, "IC1"))
            if w(i) < w(i + 1):
                target = gamma_w(w * Permutation.simple(i, q), p)
                expected.setdefault(target, set()).add((i + p, "IC2"))
        got: dict[Clan, set[tuple[int, str]]] = {}
        for cov in covers_from(gamma_w(w, p)):
            got[cov.target] = set(zip(cov.labels, cov.move_types))
        if got != expected:
            return False
    return True


def graph_to_dot(graph: WeakOrderGraph) -> str:
    lines = ["digraph weak_order {"]
    for node in graph.nodes:
        lines.append(f'  "{render_clan(node)}";')
    for cov in graph.covers:
        label = ",".join(f"s{i}" for i in cov.labels)
        lines.append(
            f'  "{render_clan(cov.source)}" -> "{render_clan(cov.target)}" [label="{label}"];'
        )
    lines.append("}")
    return "\n".join(lines)


def graph_to_json(graph: WeakOrderGraph) -> str:
    data = {
        "p": graph.p,
        "q": graph.q,
        "interval": graph.interval_only,
        "nodes": [render_clan(c) for c in graph.nodes],
        "covers": [
            {
                "source": render_clan(cov.source),
                "target": render_clan(cov.target),
                "labels": list(cov.labels),
                "move_types": list(cov.move_types),
            }
            for cov in graph.covers
        ],
    }
    return json.dumps(data, indent=2)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
