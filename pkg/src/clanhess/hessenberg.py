"""Semisimple Hessenberg varieties for diag(0^p, 1^q) and their components.

A Hessenberg vector is a nondecreasing m = (m_1, ..., m_n) with m_i >= i;
it cuts out the subvariety of flags V_1 < ... < V_n with x V_i inside
V_{m_i}, here for the diagonal involution-type element x with eigenvalue 0
of multiplicity p and 1 of multiplicity q.  That variety is a union of
K-orbit closures; an orbit closure lies inside it exactly when every pair
(i, j) of its clan satisfies m_i >= j.  The variety is irreducible exactly
when the contained clans form a lower ideal with a single maximal element,
which happens precisely for the vectors m(w) attached to 231-avoiding
permutations w in S_q.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache

from .clans import (
    Clan,
    _statistics_leq,
    as_interval_permutation,
    clan_to_json,
    enumerate_clans,
    gamma_w,
    orbit_dimension,
    statistics,
)
from .perms import Permutation, avoids, render_permutation, symmetric_group

__all__ = [
    "is_hessenberg_vector",
    "hessenberg_vectors",
    "area",
    "orbit_in_hess",
    "HessOrbitReport",
    "hess_orbit_report",
    "m_of_w",
    "hess_dimension",
    "classify_irreducibles",
    "lower_ideal_check",
    "catalan",
]

_PATTERN_231 = Permutation((2, 3, 1))


def is_hessenberg_vector(m, n: int | None = None) -> bool:
    """True iff m is nondecreasing with i <= m_i <= len(m) (and length n).

    >>> is_hessenberg_vector((1, 3, 3))
    True
    >>> is_hessenberg_vector((2, 1, 3))
    False
    """
    m = tuple(m)
    if n is not None and len(m) != n:
        return False
    size = len(m)
    prev = 1
    for i, v in enumerate(m, 1):
        if not (isinstance(v, int) and i <= v <= size and v >= prev):
            return False
        prev = v
    return size > 0


def hessenberg_vectors(n: int):
    """Yield all Hessenberg vectors of length n in lexicographic order.

    There are Catalan(n) of them.

    >>> list(hessenberg_vectors(3))
    [(1, 2, 3), (1, 3, 3), (2, 2, 3), (2, 3, 3), (3, 3, 3)]
    """
    def rec(prefix: list[int]):
        i = len(prefix)
        if i == n:
            yield tuple(prefix)
            return
        lo = max(prefix[-1] if prefix else 1, i + 1)
        for v in range(lo, n + 1):
            prefix.append(v)
            yield from rec(prefix)
            prefix.pop()

    yield from rec([])


def area(m) -> int:
    """sum(m_i - i); the dimension of the Hessenberg variety when it is
    irreducible.

    >>> area((5, 5, 6, 6, 6, 6))
    13
    """
    return sum(v - i for i, v in enumerate(m, 1))


def orbit_in_hess(clan: Clan, m) -> bool:
    """Whether the orbit closure of the clan lies in the Hessenberg variety:
    every pair (i, j) of the clan must satisfy m_i >= j.

    >>> from .clans import parse_clan
    >>> orbit_in_hess(parse_clan("+1+-2+21"), (1, 8, 8, 8, 8, 8, 8, 8))
    True
    >>> orbit_in_hess(parse_clan("+1+-2+21"), (1, 7, 7, 7, 7, 7, 7, 8))
    False
    """
    m = tuple(m)
    if not is_hessenberg_vector(m, clan.n):
        raise ValueError(f"not a Hessenberg vector of length {clan.n}: {m!r}")
    return all(m[i - 1] >= j for (i, j) in clan.arcs)


@lru_cache(maxsize=None)
def _inclusion_poset(p: int, q: int):
    """All (p,q)-clans with the full inclusion order as bitmasks.

    Returns (clans, index, up, down): up[i] has bit j set iff
    clans[i] <= clans[j], down is the transpose; both include the diagonal.
    """
    clans = enumerate_clans(p, q)
    index = {c: i for i, c in enumerate(clans)}
    stats = [statistics(c) for c in clans]
    dims = [orbit_dimension(c) for c in clans]
    size = len(clans)
    up = [1 << i for i in range(size)]
    down = [1 << i for i in range(size)]
    for i in range(size):
        for j in range(size):
            # inclusion is strictly dimension-increasing off the diagonal
            if dims[i] >= dims[j] or not _statistics_leq(stats[i], stats[j]):
                continue
            up[i] |= 1 << j
            down[j] |= 1 << i
    return clans, index, tuple(up), tuple(down)


@dataclass(frozen=True)
class HessOrbitReport:
    """Orbit-closure decomposition of one Hessenberg variety."""

    p: int
    q: int
    m: tuple[int, ...]
    contained: tuple[Clan, ...]
    maximal: tuple[Clan, ...]
    irreducible: bool
    witness: Permutation | None

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "m": list(self.m),
            "contained": [clan_to_json(c) for c in self.contained],
            "maximal": [clan_to_json(c) for c in self.maximal],
            "irreducible": self.irreducible,
            "witness": (
                render_permutation(self.witness) if self.witness is not None else None
            ),
        }


def hess_orbit_report(p: int, q: int, m) -> HessOrbitReport:
    """Which orbit closures fill the Hessenberg variety of m, its maximal
    ones, and the interval permutation of the unique component if any."""
    m = tuple(m)
    clans, _, up, _ = _inclusion_poset(p, q)
    contained_idx = [i for i, c in enumerate(clans) if orbit_in_hess(c, m)]
    mask = 0
    for i in contained_idx:
        mask |= 1 << i
    maximal = tuple(clans[i] for i in contained_idx if up[i] & mask == 1 << i)
    irreducible = len(maximal) == 1
    witness = as_interval_permutation(maximal[0]) if irreducible else None
    return HessOrbitReport(
        p,
        q,
        m,
        tuple(clans[i] for i in contained_idx),
        maximal,
        irreducible,
        witness,
    )


def m_of_w(w: Permutation, p: int) -> tuple[int, ...]:
    """The Hessenberg vector with component closure(Q_{gamma_w}):
    m_i = p + max{w^{-1}(k) : k <= i} for i <= q, and m_i = n beyond.

    Defined for 231-avoiding w only.

    >>> m_of_w(Permutation((2, 1, 3)), 3)
    (5, 5, 6, 6, 6, 6)
    """
    q = w.degree
    n = p + q
    if p < q:
        raise ValueError(f"need p >= q = deg(w), got p={p}, q={q}")
    if not avoids(w, _PATTERN_231):
        raise ValueError(
            f"{render_permutation(w)} contains the pattern 231; "
            "no irreducible Hessenberg vector is attached to it"
        )
    inv = w.inverse()
    best = 0
    m = []
    for i in range(1, q + 1):
        best = max(best, inv(i))
        m.append(best + p)
    m.extend([n] * p)
    return tuple(m)


def hess_dimension(w: Permutation, p: int) -> int:
    """Dimension length(w) + p*q + p(p-1)/2 of the irreducible Hessenberg
    variety of m(w); equals area(m_of_w(w, p)).

    >>> hess_dimension(Permutation((2, 1, 3)), 3)
    13
    """
    m_of_w(w, p)  # validates p >= q and 231-avoidance
    q = w.degree
    return w.length() + p * q + p * (p - 1) // 2


def classify_irreducibles(p: int, q: int) -> dict[Permutation, tuple[int, ...]]:
    """The Catalan(q) Hessenberg vectors with irreducible variety, keyed by
    their 231-avoiding witness permutation."""
    out: dict[Permutation, tuple[int, ...]] = {}
    for w in symmetric_group(q):
        if avoids(w, _PATTERN_231):
            out[w] = m_of_w(w, p)
    if len(set(out.values())) != len(out) or len(out) != catalan(q):
        raise AssertionError(f"irreducible classification degenerate at ({p},{q})")
    return out


def lower_ideal_check(w: Permutation, p: int) -> bool:
    """Whether the clans contained in the variety of m(w) are exactly the
    clans below gamma_w in inclusion order."""
    q = w.degree
    clans, index, _, down = _inclusion_poset(p, q)
    m = m_of_w(w, p)
    mask = 0
    for i, c in enumerate(clans):
        if orbit_in_hess(c, m):
            mask |= 1 << i
    return mask == down[index[gamma_w(w, p)]]


def catalan(n: int) -> int:
    """The Catalan number C(2n, n)/(n + 1).

    >>> [catalan(k) for k in range(6)]
    [1, 1, 2, 5, 14, 42]
    """
    return math.comb(2 * n, n) // (n + 1)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
