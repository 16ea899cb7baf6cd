"""(p,q)-clans and the inclusion order on K-orbit closures.

A (p,q)-clan is a string of n = p+q symbols, each a sign or a natural
number, in which every number used appears exactly twice and
(#pluses) - (#minuses) = p - q.  Clans are stored in canonical form: the
pair labels are 1, ..., ell with first occurrences in increasing order.
Clans index the orbits of K = GL_p x GL_q on the type A flag variety;
the inclusion order below is the closure containment order on orbits.

We require p >= q throughout; a clan with more minuses than pluses is
rejected with a hint to transpose the two signs.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass

from .perms import Permutation, symmetric_group

__all__ = [
    "PLUS",
    "MINUS",
    "Clan",
    "ClanStatistics",
    "ChargedMatching",
    "parse_clan",
    "render_clan",
    "enumerate_clans",
    "clan_count",
    "statistics",
    "inclusion_leq",
    "clan_length",
    "orbit_dimension",
    "gamma_w",
    "dense_clan",
    "sigma_clan",
    "tau_clan",
    "interval_clans",
    "as_interval_permutation",
    "gamma_w_pair_statistic",
    "clan_to_json",
    "clan_from_json",
    "matching_to_json",
    "matching_from_json",
]

PLUS = "+"
MINUS = "-"


class Clan:
    """A (p,q)-clan in canonical form.

    >>> str(Clan(("5", "+", "+", 3, "-", "+", 3, "5", "+")))
    '1++2-+21+'
    >>> Clan((1, 1)).p, Clan((1, 1)).q
    (1, 1)
    """

    __slots__ = ("symbols", "p", "q")

    def __init__(self, symbols) -> None:
        relabel: dict = {}
        out: list = []
        for c in symbols:
            if c == PLUS or c == MINUS:
                out.append(c)
            else:
                out.append(relabel.setdefault(c, len(relabel) + 1))
        counts = [0] * len(relabel)
        for c in out:
            if isinstance(c, int):
                counts[c - 1] += 1
        if any(k != 2 for k in counts):
            raise ValueError(f"every pair label must occur exactly twice: {symbols!r}")
        ell = len(relabel)
        s = out.count(PLUS)
        t = out.count(MINUS)
        p, q = ell + s, ell + t
        if q < 1:
            raise ValueError(f"need q >= 1, got (p,q)=({p},{q}): {symbols!r}")
        if p < q:
            raise ValueError(
                f"got (p,q)=({p},{q}) with p < q; transpose the clan "
                f"(swap + and -) to land in the supported p >= q case"
            )
        self.symbols = tuple(out)
        self.p = p
        self.q = q

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def num_pairs(self) -> int:
        return (self.n - self.symbols.count(PLUS) - self.symbols.count(MINUS)) // 2

    @property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        """Pairs (i, j), i < j, of 1-indexed positions, one per label."""
        first: dict[int, int] = {}
        arcs = []
        for pos, c in enumerate(self.symbols, 1):
            if isinstance(c, int):
                if c in first:
                    arcs.append((first[c], pos))
                else:
                    first[c] = pos
        arcs.sort()
        return tuple(arcs)

    @property
    def charges(self) -> tuple[tuple[int, str], ...]:
        """Pairs (position, sign) for the signed positions, 1-indexed."""
        return tuple(
            (pos, c) for pos, c in enumerate(self.symbols, 1) if not isinstance(c, int)
        )

    def to_matching(self) -> "ChargedMatching":
        return ChargedMatching(self.n, frozenset(self.arcs), dict(self.charges))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Clan) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __str__(self) -> str:
        return render_clan(self)

    def __repr__(self) -> str:
        return f"Clan({render_clan(self)!r})"


@dataclass(frozen=True)
class ClanStatistics:
    """The three families of orbit invariants attached to a clan.

    plus_counts[i-1] counts pluses and completed pairs among the first i
    symbols; minus_counts is the minus analogue; pair_matrix[i-1][j-1]
    counts pairs c_s = c_t with s <= i < j < t.
    """

    plus_counts: tuple[int, ...]
    minus_counts: tuple[int, ...]
    pair_matrix: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ChargedMatching:
    """Partial matching view of a clan: arcs between paired positions plus
    charges on the unmatched ones.  Positions are 1-indexed."""

    n: int
    arcs: frozenset[tuple[int, int]]
    charges: dict[int, str]

    def to_clan(self) -> Clan:
        symbols: list = [None] * self.n
        for pos, sign in self.charges.items():
            symbols[pos - 1] = sign
        for label, (i, j) in enumerate(sorted(self.arcs), 1):
            symbols[i - 1] = symbols[j - 1] = label
        if any(c is None for c in symbols):
            raise ValueError("matching does not cover all positions")
        return Clan(symbols)


def parse_clan(text: str, p: int | None = None, q: int | None = None) -> Clan:
    """Parse compact ("1++2-+21+") or whitespace-separated token form.

    >>> str(parse_clan("5++3-+35+", 6, 3))
    '1++2-+21+'
    """
    text = text.strip()
    tokens = text.split() if any(ch.isspace() for ch in text) else list(text)
    if p is not None and q is not None and len(tokens) != p + q:
        raise ValueError(
            f"clan {text!r} has {len(tokens)} symbols, expected n = p+q = {p + q}"
        )
    symbols: list = []
    for tok in tokens:
        if tok in (PLUS, MINUS):
            symbols.append(tok)
        elif tok.isdigit() and int(tok) > 0:
            symbols.append(int(tok))
        else:
            raise ValueError(f"bad clan symbol {tok!r} in {text!r}")
    clan = Clan(symbols)
    if p is not None and q is not None and (clan.p, clan.q) != (p, q):
        raise ValueError(
            f"clan {text!r} has signature (p,q)=({clan.p},{clan.q}), "
            f"expected ({p},{q}); the sign balance must equal p-q"
        )
    return clan


def render_clan(clan: Clan) -> str:
    """Compact form when all labels are single digits, else token form."""
    if all(not isinstance(c, int) or c <= 9 for c in clan.symbols):
        return "".join(str(c) for c in clan.symbols)
    return " ".join(str(c) for c in clan.symbols)


def clan_sort_key(clan: Clan) -> str:
    return render_clan(clan)


def _perfect_matchings(positions: tuple[int, ...]):
    """All perfect matchings on an even tuple of positions, as arc lists."""
    if not positions:
        yield []
        return
    first, rest = positions[0], positions[1:]
    for k, other in enumerate(rest):
        for sub in _perfect_matchings(rest[:k] + rest[k + 1 :]):
            yield [(first, other)] + sub


def enumerate_clans(p: int, q: int) -> tuple[Clan, ...]:
    """All (p,q)-clans, sorted by their rendered text.

    >>> [str(c) for c in enumerate_clans(1, 1)]
    ['+-', '-+', '11']
    """
    if not p >= q >= 1:
        raise ValueError(f"need p >= q >= 1, got ({p},{q})")
    n = p + q
    found = []
    for ell in range(q + 1):
        for pair_positions in itertools.combinations(range(1, n + 1), 2 * ell):
            taken = set(pair_positions)
            rest = [i for i in range(1, n + 1) if i not in taken]
            for arcs in _perfect_matchings(pair_positions):
                for plus_positions in itertools.combinations(rest, p - ell):
                    symbols: list = [MINUS] * n
                    for pos in plus_positions:
                        symbols[pos - 1] = PLUS
                    for label, (i, j) in enumerate(sorted(arcs), 1):
                        symbols[i - 1] = symbols[j - 1] = label
                    found.append(Clan(symbols))
    found.sort(key=clan_sort_key)
    return tuple(found)


def clan_count(p: int, q: int) -> int:
    """Closed-form count: sum over ell of C(n,2ell)(2ell-1)!!C(n-2ell,p-ell)."""
    n = p + q
    total = 0
    for ell in range(q + 1):
        double_factorial = math.prod(range(1, 2 * ell, 2))
        total += math.comb(n, 2 * ell) * double_factorial * math.comb(n - 2 * ell, p - ell)
    return total


def statistics(clan: Clan) -> ClanStatistics:
    """Compute the sign-counting and pair-counting statistics of a clan.

    >>> statistics(parse_clan("+1+-2+21", 5, 3)).plus_counts
    (1, 1, 2, 2, 2, 3, 4, 5)
    """
    n = clan.n
    arcs = clan.arcs
    plus_counts = []
    minus_counts = []
    pluses = minuses = 0
    for i in range(1, n + 1):
        c = clan.symbols[i - 1]
        if c == PLUS:
            pluses += 1
        elif c == MINUS:
            minuses += 1
        completed = sum(1 for (s, t) in arcs if t <= i)
        plus_counts.append(pluses + completed)
        minus_counts.append(minuses + completed)
    matrix = [[0] * n for _ in range(n)]
    for (s, t) in arcs:
        for i in range(s, t - 1):
            for j in range(i + 1, t):
                matrix[i - 1][j - 1] += 1
    return ClanStatistics(
        tuple(plus_counts), tuple(minus_counts), tuple(tuple(row) for row in matrix)
    )


def _statistics_leq(sa: ClanStatistics, sb: ClanStatistics) -> bool:
    """Inclusion comparison on precomputed statistics; see inclusion_leq."""
    n = len(sa.plus_counts)
    for i in range(n):
        if sa.plus_counts[i] < sb.plus_counts[i]:
            return False
        if sa.minus_counts[i] < sb.minus_counts[i]:
            return False
    for i in range(n):
        row_a, row_b = sa.pair_matrix[i], sb.pair_matrix[i]
        for j in range(i + 1, n):
            if row_a[j] > row_b[j]:
                return False
    return True


def inclusion_leq(a: Clan, b: Clan) -> bool:
    """Orbit-closure containment order: O_a lies in the closure of O_b.

    a <= b iff a's sign statistics dominate b's at every position and a's
    pair statistics are dominated by b's at every i < j.
    """
    if (a.p, a.q) != (b.p, b.q):
        raise ValueError(
            f"shape mismatch: ({a.p},{a.q}) vs ({b.p},{b.q}); "
            "inclusion compares clans of equal signature"
        )
    return _statistics_leq(statistics(a), statistics(b))


def clan_length(clan: Clan) -> int:
    """Sum over pairs (i,j) of j - i minus the number of pairs (s,t) with
    s < i < t < j; equals the dimension of the orbit part above the base.

    >>> clan_length(parse_clan("1122", 2, 2))
    2
    """
    arcs = clan.arcs
    total = 0
    for (i, j) in arcs:
        inner = sum(1 for (s, t) in arcs if s < i < t < j)
        total += j - i - inner
    return total


def orbit_dimension(clan: Clan) -> int:
    """Dimension of the K-orbit indexed by the clan."""
    p, q = clan.p, clan.q
    return clan_length(clan) + p * (p - 1) // 2 + q * (q - 1) // 2


def gamma_w(w: Permutation, p: int) -> Clan:
    """The interval clan 1..q +..+ w(1)..w(q) attached to w in S_q.

    >>> str(gamma_w(Permutation((2, 1, 3)), 5))
    '123++213'
    """
    q = w.degree
    if p < q:
        raise ValueError(f"need p >= q = deg(w), got p={p}, q={q}")
    symbols: list = list(range(1, q + 1)) + [PLUS] * (p - q) + [w(j) for j in range(1, q + 1)]
    return Clan(symbols)


def dense_clan(p: int, q: int) -> Clan:
    """The unique maximal clan 1..q +..+ q..1 (the dense orbit)."""
    return gamma_w(Permutation.longest(q), p)


def sigma_clan(p: int, q: int) -> Clan:
    """All pluses then all minuses; a closed orbit."""
    return Clan([PLUS] * p + [MINUS] * q)


def tau_clan(p: int, q: int) -> Clan:
    """All minuses then all pluses; a closed orbit."""
    return Clan([MINUS] * q + [PLUS] * p)


def interval_clans(p: int, q: int) -> tuple[Clan, ...]:
    """The q! clans gamma_w, sorted by rendered text."""
    clans = [gamma_w(w, p) for w in symmetric_group(q)]
    clans.sort(key=clan_sort_key)
    return tuple(clans)


def as_interval_permutation(clan: Clan) -> Permutation | None:
    """Recover w with clan == gamma_w, or None if not of that shape."""
    p, q, n = clan.p, clan.q, clan.n
    head = clan.symbols[:q]
    body = clan.symbols[q:p]
    tail = clan.symbols[p:]
    if head != tuple(range(1, q + 1)) or any(c != PLUS for c in body):
        return None
    if sorted(tail) != list(range(1, q + 1)):
        return None
    return Permutation(tuple(tail))


def gamma_w_pair_statistic(w: Permutation, p: int, i: int, j: int) -> int:
    """Closed form |{k <= i : w^{-1}(k) > j - p}| for the pair statistic of
    gamma_w in the window i in [q], j in {p+1, ..., p+q}."""
    q = w.degree
    n = p + q
    if not 1 <= i <= q:
        raise ValueError(f"need i in [q] = [{q}], got {i}")
    if not p + 1 <= j <= n:
        raise ValueError(f"need j in [{p + 1},{n}], got {j}")
    inv = w.inverse()
    return sum(1 for k in range(1, i + 1) if inv(k) > j - p)


def clan_to_json(clan: Clan) -> dict:
    return {
        "p": clan.p,
        "q": clan.q,
        "symbols": [str(c) for c in clan.symbols],
    }


def clan_from_json(data: dict | str) -> Clan:
    if isinstance(data, str):
        data = json.loads(data)
    symbols = []
    for tok in data["symbols"]:
        symbols.append(tok if tok in (PLUS, MINUS) else int(tok))
    clan = Clan(symbols)
    if (clan.p, clan.q) != (data["p"], data["q"]):
        raise ValueError(
            f"JSON signature ({data['p']},{data['q']}) does not match "
            f"symbols with ({clan.p},{clan.q})"
        )
    return clan


def matching_to_json(m: ChargedMatching) -> dict:
    return {
        "n": m.n,
        "arcs": [list(arc) for arc in sorted(m.arcs)],
        "charges": {str(pos): sign for pos, sign in sorted(m.charges.items())},
    }


def matching_from_json(data: dict | str) -> ChargedMatching:
    if isinstance(data, str):
        data = json.loads(data)
    arcs = frozenset((int(i), int(j)) for i, j in data["arcs"])
    charges = {int(pos): sign for pos, sign in data["charges"].items()}
    return ChargedMatching(int(data["n"]), arcs, charges)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
