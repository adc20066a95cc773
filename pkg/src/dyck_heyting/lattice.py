"""Dominance order, meets, joins, enumeration and Hasse diagrams."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from math import comb
from typing import Union

import numpy as np

from .paths import (
    DomainError,
    HeightSeqA,
    HeightSeqB,
    MonotonePath,
    ValidationError,
    _coerce_word,
)

Path = Union[HeightSeqA, HeightSeqB, MonotonePath]

FAMILIES = ("A", "B", "mono")

# Default enumeration guards: maximum n for A and B, maximum n + m for mono.
DEFAULT_GUARDS = {"A": 12, "B": 9, "mono": 20}
GUARD_ENV = "DYCK_HEYTING_GUARDS"


class GuardError(DomainError):
    """Enumeration request exceeds the configured size guard."""


def family_tag(text: str) -> str:
    """Normalise ``a``/``b``/``mono`` (any case) to ``A``/``B``/``mono``."""
    t = text.strip().lower()
    if t in ("a", "b"):
        return t.upper()
    if t == "mono":
        return "mono"
    raise ValidationError(f"unknown family {text!r} (expected a, b or mono)")


def guards() -> dict[str, int]:
    """Guard bounds, optionally raised through ``DYCK_HEYTING_GUARDS=a=14,b=10,mono=24``."""
    out = dict(DEFAULT_GUARDS)
    raw = os.environ.get(GUARD_ENV, "").strip()
    if raw:
        for item in raw.split(","):
            key, _, value = item.partition("=")
            out[family_tag(key)] = int(value)
    return out


def make_path(family: str, h, n: int | None = None, m: int | None = None) -> Path:
    """Build a validated path of the given family from a height tuple."""
    if family == "A":
        p = HeightSeqA(tuple(h))
        if n is not None and p.n != n:
            raise ValidationError(f"expected {n} entries for a type A path, got {p.n}")
        return p
    if family == "B":
        if n is None:
            raise ValidationError("type B sequences need an explicit n")
        return HeightSeqB(n, tuple(h))
    if family == "mono":
        if m is None:
            raise ValidationError("monotone paths need an explicit m")
        p = MonotonePath(m, tuple(h))
        if n is not None and p.n != n:
            raise ValidationError(f"expected {n} entries for a monotone path, got {p.n}")
        return p
    raise ValidationError(f"unknown family {family!r}")


def _same_space(p: Path, q: Path) -> None:
    if type(p) is not type(q) or p.params != q.params:
        raise DomainError(f"paths from different lattices: {p!r} vs {q!r}")


# ---------------------------------------------------------------------------
# Order
# ---------------------------------------------------------------------------


def leq_a(p: HeightSeqA, q: HeightSeqA) -> bool:
    _same_space(p, q)
    return all(x <= y for x, y in zip(p.h, q.h))


def leq_mono(p: MonotonePath, q: MonotonePath) -> bool:
    _same_space(p, q)
    return all(x <= y for x, y in zip(p.h, q.h))


def leq_b(p: HeightSeqB, q: HeightSeqB) -> bool:
    """``k >= k'`` and ``h_i <= h'_i`` on the first ``k'`` entries."""
    _same_space(p, q)
    return p.k >= q.k and all(p.h[i] <= q.h[i] for i in range(q.k))


def leq(p: Path, q: Path) -> bool:
    if isinstance(p, HeightSeqB):
        return leq_b(p, q)
    if isinstance(p, HeightSeqA):
        return leq_a(p, q)
    return leq_mono(p, q)


def word_prefix_leq(w, w2) -> bool:
    """Every prefix of ``w`` has at least as many r's as the same-length prefix of ``w2``."""
    w, w2 = _coerce_word(w, "A"), _coerce_word(w2, "A")
    if len(w) != len(w2):
        raise DomainError(f"word lengths differ: {len(w)} vs {len(w2)}")
    rs = rs2 = 0
    for a, b in zip(w.steps, w2.steps):
        rs += a == "r"
        rs2 += b == "r"
        if rs < rs2:
            return False
    return True


# ---------------------------------------------------------------------------
# Meet and join
# ---------------------------------------------------------------------------


def meet_a(p: HeightSeqA, q: HeightSeqA) -> HeightSeqA:
    _same_space(p, q)
    return HeightSeqA(tuple(map(min, p.h, q.h)))


def join_a(p: HeightSeqA, q: HeightSeqA) -> HeightSeqA:
    _same_space(p, q)
    return HeightSeqA(tuple(map(max, p.h, q.h)))


def meet_mono(p: MonotonePath, q: MonotonePath) -> MonotonePath:
    _same_space(p, q)
    return MonotonePath(p.m, tuple(map(min, p.h, q.h)))


def join_mono(p: MonotonePath, q: MonotonePath) -> MonotonePath:
    _same_space(p, q)
    return MonotonePath(p.m, tuple(map(max, p.h, q.h)))


def meet_b(p: HeightSeqB, q: HeightSeqB) -> HeightSeqB:
    """Componentwise min on the shared prefix, then the tail of the longer sequence."""
    _same_space(p, q)
    if p.k < q.k:
        p, q = q, p
    return HeightSeqB(p.n, tuple(map(min, p.h, q.h)) + p.h[q.k :])


def join_b(p: HeightSeqB, q: HeightSeqB) -> HeightSeqB:
    """Componentwise max, truncated to the shorter length."""
    _same_space(p, q)
    return HeightSeqB(p.n, tuple(map(max, p.h, q.h)))


def meet(p: Path, q: Path) -> Path:
    if isinstance(p, HeightSeqB):
        return meet_b(p, q)
    if isinstance(p, HeightSeqA):
        return meet_a(p, q)
    return meet_mono(p, q)


def join(p: Path, q: Path) -> Path:
    if isinstance(p, HeightSeqB):
        return join_b(p, q)
    if isinstance(p, HeightSeqA):
        return join_a(p, q)
    return join_mono(p, q)


def bottom(family: str, n: int, m: int | None = None) -> Path:
    if family == "A":
        return HeightSeqA(tuple(range(1, n + 1)))
    if family == "B":
        return HeightSeqB(n, tuple(range(1, n + 1)))
    return MonotonePath(m, (0,) * n)


def top(family: str, n: int, m: int | None = None) -> Path:
    if family == "A":
        return HeightSeqA((n,) * n)
    if family == "B":
        return HeightSeqB(n, (2 * n,))
    return MonotonePath(m, (m,) * n)


def bottom_of(p: Path) -> Path:
    return bottom(p.family, p.n, getattr(p, "m", None))


def top_of(p: Path) -> Path:
    return top(p.family, p.n, getattr(p, "m", None))


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def closed_count(family: str, n: int, m: int | None = None) -> int:
    if family == "A":
        return comb(2 * n, n) // (n + 1)
    if family == "B":
        return comb(2 * n, n)
    return comb(n + m, n)


def _increasing(length: int, lo, hi: int, start: int = 0):
    """Weakly increasing tuples with ``lo(i) <= h_i <= hi`` (``i`` 1-based), in lex order."""
    h = [0] * length

    def rec(i: int, prev: int):
        if i == length:
            yield tuple(h)
            return
        for x in range(max(prev, lo(i + 1)), hi + 1):
            h[i] = x
            yield from rec(i + 1, x)

    yield from rec(0, start)


def iter_family(family: str, n: int, m: int | None = None):
    """All height tuples of a family in snapshot id order."""
    if family == "A":
        yield from _increasing(n, lambda i: i, n)
    elif family == "B":
        for k in range(n, 0, -1):
            for head in _increasing(k - 1, lambda i: i, 2 * n - k):
                yield head + (2 * n - k,)
                yield head + (2 * n - k + 1,)
    elif family == "mono":
        yield from _increasing(n, lambda i: 0, m)
    else:
        raise ValidationError(f"unknown family {family!r}")


def check_guard(family: str, n: int, m: int | None = None, limit: int | None = None) -> None:
    if n < 1:
        raise ValidationError(f"n must be at least 1, got {n}")
    if family == "mono":
        if m is None or m < 0:
            raise ValidationError("monotone family needs m >= 0")
        size = n + m
    else:
        size = n
    bound = guards()[family] if limit is None else limit
    if size > bound:
        what = "n + m" if family == "mono" else "n"
        raise GuardError(f"{what}={size} exceeds the enumeration guard {bound} for family {family}")


@dataclass(eq=False)
class LatticeSnapshot:
    """An enumerated lattice with stable element ids.

    Ids follow the sequence order: lexicographic for A and mono; for B by
    descending length, then lexicographic.  Covers are computed on first use.
    """

    family: str
    params: tuple[int, ...]
    elements: tuple[Path, ...]
    _covers: frozenset | None = field(default=None, repr=False)
    _index: dict = field(default=None, repr=False)
    _leq: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        self._index = {p: i for i, p in enumerate(self.elements)}

    @property
    def n(self) -> int:
        return self.params[0]

    @property
    def m(self) -> int | None:
        return self.params[1] if self.family == "mono" else None

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        if not isinstance(other, LatticeSnapshot):
            return NotImplemented
        return (
            self.family == other.family
            and self.params == other.params
            and self.elements == other.elements
            and self.covers == other.covers
        )

    def id_of(self, p: Path) -> int:
        try:
            return self._index[p]
        except KeyError:
            raise DomainError(f"{p!r} is not an element of this snapshot") from None

    @property
    def bottom(self) -> Path:
        return bottom(self.family, self.n, self.m)

    @property
    def top(self) -> Path:
        return top(self.family, self.n, self.m)

    @property
    def leq_matrix(self) -> np.ndarray:
        """Boolean ``N x N`` matrix, ``[a, b]`` true iff element ``a <= b``."""
        if self._leq is None:
            self._leq = _leq_matrix(self)
        return self._leq

    @property
    def covers(self) -> frozenset:
        if self._covers is None:
            self._covers = covers(self)
        return self._covers

    def upper_covers(self, i: int) -> list[int]:
        return sorted(b for a, b in self.covers if a == i)

    def lower_covers(self, i: int) -> list[int]:
        return sorted(a for a, b in self.covers if b == i)


def _padded(snapshot: LatticeSnapshot) -> np.ndarray:
    # B sequences are padded past k with 2n+1, which turns the B order into plain
    # componentwise comparison.
    n = snapshot.n
    width = max(p.n if snapshot.family != "B" else n for p in snapshot.elements)
    arr = np.full((len(snapshot), width), 2 * n + 1, dtype=np.int16)
    for i, p in enumerate(snapshot.elements):
        arr[i, : len(p.h)] = p.h
    return arr


def _leq_matrix(snapshot: LatticeSnapshot) -> np.ndarray:
    arr = _padded(snapshot)
    size = len(arr)
    out = np.empty((size, size), dtype=bool)
    step = max(1, 4_000_000 // max(1, size * arr.shape[1]))
    for start in range(0, size, step):
        block = arr[start : start + step]
        out[start : start + step] = (block[:, None, :] <= arr[None, :, :]).all(axis=2)
    return out


def enumerate_family(family: str, n: int, m: int | None = None, limit: int | None = None) -> LatticeSnapshot:
    """Enumerate every path of a family by backtracking over its constraints."""
    family = family_tag(family) if family not in FAMILIES else family
    check_guard(family, n, m, limit)
    if family == "A":
        elements = tuple(HeightSeqA(h) for h in iter_family("A", n))
        params = (n,)
    elif family == "B":
        elements = tuple(HeightSeqB(n, h) for h in iter_family("B", n))
        params = (n,)
    else:
        elements = tuple(MonotonePath(m, h) for h in iter_family("mono", n, m))
        params = (n, m)
    return LatticeSnapshot(family, params, elements)


def covers(snapshot: LatticeSnapshot) -> frozenset:
    """Transitive reduction of the dominance order as ``(lower, upper)`` id pairs."""
    le = snapshot.leq_matrix
    lt = le & ~np.eye(len(le), dtype=bool)
    ltf = lt.astype(np.float32)
    # a < c < b for some c
    between = (ltf @ ltf) > 0
    lo, hi = np.nonzero(lt & ~between)
    return frozenset(zip(lo.tolist(), hi.tolist()))
