"""Triangle posets of join-irreducibles and the order-ideal representation.

A join-irreducible path is determined by its unique index ``i`` with
``h_i > i`` and ``h_i > h_{i-1}``, together with ``j = h_i``.  The pairs
``(i, j)`` form the triangle posets

    T_n^A = {(i, j) : 1 <= i < j <= n}
    T_n^B = {(i, j) : 1 <= i < j <= 2n + 1 - i}

ordered by ``(a, b) <= (a', b')`` iff ``a >= a'`` and ``b <= b'``.  Every path
corresponds to the order ideal of pairs whose paths lie below it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .heyting import irreducible_indices, is_join_irreducible
from .lattice import Path, bottom, enumerate_family, join, leq, meet
from .paths import DomainError, HeightSeqA, HeightSeqB, ValidationError

Pair = tuple[int, int]


def pair_leq(a: Pair, b: Pair) -> bool:
    return a[0] >= b[0] and a[1] <= b[1]


@dataclass(frozen=True)
class TrianglePoset:
    family: str
    n: int
    elements: tuple[Pair, ...]

    def leq(self, a: Pair, b: Pair) -> bool:
        return pair_leq(a, b)

    def below(self, x: Pair) -> list[Pair]:
        return [y for y in self.elements if pair_leq(y, x)]

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.elements


@dataclass(frozen=True)
class OrderIdeal:
    poset: TrianglePoset = field(repr=False)
    members: frozenset

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        for x in sorted(self.members):
            if x not in self.poset:
                raise DomainError(f"{x} is not an element of T_{self.poset.n}^{self.poset.family}")
            for y in self.poset.below(x):
                if y not in self.members:
                    raise DomainError(f"not downward closed: {x} is present but {y} <= {x} is missing")

    def __len__(self):
        return len(self.members)

    def __le__(self, other: OrderIdeal) -> bool:
        return self.members <= other.members

    @classmethod
    def _closed(cls, poset: TrianglePoset, members: frozenset) -> OrderIdeal:
        # intersections and unions of ideals are ideals; skip re-validation
        out = object.__new__(cls)
        object.__setattr__(out, "poset", poset)
        object.__setattr__(out, "members", members)
        return out

    def __and__(self, other: OrderIdeal) -> OrderIdeal:
        return OrderIdeal._closed(self.poset, self.members & other.members)

    def __or__(self, other: OrderIdeal) -> OrderIdeal:
        return OrderIdeal._closed(self.poset, self.members | other.members)


def triangle_poset(family: str, n: int) -> TrianglePoset:
    if n < 1:
        raise ValidationError(f"n must be at least 1, got {n}")
    if family == "A":
        elems = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    elif family == "B":
        elems = [(i, j) for i in range(1, n + 1) for j in range(i + 1, 2 * n + 2 - i)]
    else:
        raise ValidationError(f"triangle posets exist for families A and B, not {family!r}")
    return TrianglePoset(family, n, tuple(elems))


def order_ideals(poset: TrianglePoset) -> list[frozenset]:
    """All downward-closed subsets, by backtracking along a linear extension."""
    # increasing in the pair order: larger first coordinate and smaller second first
    ext = sorted(poset.elements, key=lambda x: (x[1] - x[0], -x[0]))
    below = {x: [y for y in poset.elements if y != x and pair_leq(y, x)] for x in ext}
    out = []
    chosen: set = set()

    def rec(t: int):
        if t == len(ext):
            out.append(frozenset(chosen))
            return
        x = ext[t]
        rec(t + 1)
        if all(y in chosen for y in below[x]):
            chosen.add(x)
            rec(t + 1)
            chosen.discard(x)

    rec(0)
    return out


def prime_index(p: Path) -> Pair:
    idx = irreducible_indices(p)
    if len(idx) != 1:
        raise DomainError(f"{p} is not join-irreducible ({len(idx)} candidate indices)")
    i = idx[0]
    return (i, p.h[i - 1])


def path_for_prime(family: str, n: int, pair: Pair) -> Path:
    """The join-irreducible path with index pair ``(i, j)``.

    Entries before ``i`` hug the diagonal and entries from ``i`` on are
    ``max(j, s)``; for type B the sequence is cut at ``max(i, min(n, 2n - j))``,
    the longest length that keeps ``j`` admissible.
    """
    i, j = pair
    if family == "A":
        if not 1 <= i < j <= n:
            raise DomainError(f"{pair} is not in T_{n}^A")
        return HeightSeqA(tuple(s if s < i else max(j, s) for s in range(1, n + 1)))
    if not (1 <= i < j <= 2 * n + 1 - i):
        raise DomainError(f"{pair} is not in T_{n}^B")
    k = max(i, min(n, 2 * n - j))
    return HeightSeqB(n, tuple(s if s < i else max(j, s) for s in range(1, k + 1)))


def irreducibles_below(p: Path) -> OrderIdeal:
    poset = triangle_poset(p.family, p.n)
    members = [x for x in poset.elements if leq(path_for_prime(p.family, p.n, x), p)]
    return OrderIdeal(poset, frozenset(members))


def path_from_ideal(ideal: OrderIdeal) -> Path:
    """Join of the irreducibles indexed by the ideal, in sorted order; empty gives bottom."""
    poset = ideal.poset
    out = bottom(poset.family, poset.n)
    for x in sorted(ideal.members):
        out = join(out, path_for_prime(poset.family, poset.n, x))
    return out


@dataclass
class BirkhoffReport:
    family: str
    n: int
    elements: int = 0
    ideals: int = 0
    irreducibles: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, what: str, *witness) -> None:
        # keep the first few witnesses per kind
        if sum(f[0] == what for f in self.failures) < 5:
            self.failures.append((what, *witness))

    def __str__(self):
        status = "pass" if self.ok else "FAIL"
        head = (
            f"birkhoff {self.family} n={self.n}: {status} "
            f"({self.elements} paths, {self.ideals} ideals, {self.irreducibles} irreducibles)"
        )
        return "\n".join([head] + [f"  {f}" for f in self.failures])


def verify_birkhoff(family: str, n: int) -> BirkhoffReport:
    """Check ``D_n ≅ I(T_n)`` exhaustively: bijection, order both ways, meets and joins."""
    snap = enumerate_family(family, n)
    poset = triangle_poset(family, n)
    rep = BirkhoffReport(family, n, elements=len(snap))

    irr = [p for p in snap if is_join_irreducible(p)]
    rep.irreducibles = len(irr)
    if sorted(prime_index(p) for p in irr) != sorted(poset.elements):
        rep.fail("irreducibles", "prime_index image differs from the triangle poset")
    for p in irr:
        if path_for_prime(family, n, prime_index(p)) != p:
            rep.fail("path_for_prime", str(p))
    for p in irr:
        for q in irr:
            if leq(p, q) != pair_leq(prime_index(p), prime_index(q)):
                rep.fail("irreducible order", str(p), str(q))

    all_ideals = set(order_ideals(poset))
    rep.ideals = len(all_ideals)
    image = {}
    for p in snap:
        ideal = irreducibles_below(p)
        image[p] = ideal
        if path_from_ideal(ideal) != p:
            rep.fail("round trip", str(p))
    if set(i.members for i in image.values()) != all_ideals or len(all_ideals) != len(snap):
        rep.fail("bijection", f"{len(snap)} paths vs {len(all_ideals)} ideals")

    elems = list(snap)
    sets = {p: image[p].members for p in elems}
    for p in elems:
        sp = sets[p]
        for q in elems:
            sq = sets[q]
            if leq(p, q) != (sp <= sq):
                rep.fail("order", str(p), str(q))
            if sets[meet(p, q)] != sp & sq:
                rep.fail("meet", str(p), str(q))
            if sets[join(p, q)] != sp | sq:
                rep.fail("join", str(p), str(q))
    return rep
