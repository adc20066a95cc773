"""Relative pseudocomplements, pseudocomplements, regular and join-irreducible paths.

All ``impl_*`` closed forms are evaluated from the right: each entry may
depend on the entry after it.  The ``*_blocks`` variants are structurally
different formulations (constant blocks between consecutive violation
indices) kept for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .lattice import Path, _same_space, bottom, bottom_of, check_guard, top_of
from .paths import (
    HeightSeqA,
    HeightSeqB,
    MonotonePath,
    ValidationError,
    heights_to_word_a,
    heights_to_word_b,
    word_to_heights_a,
    word_to_heights_b,
)

# ---------------------------------------------------------------------------
# Relative pseudocomplement
# ---------------------------------------------------------------------------


def _impl_from_right(h1, h2, last_if_ok: int) -> list[int]:
    n = len(h1)
    out = [0] * n
    for i in range(n - 1, -1, -1):
        if h1[i] > h2[i]:
            out[i] = h2[i]
        elif i == n - 1:
            out[i] = last_if_ok
        else:
            out[i] = out[i + 1]
    return out


def impl_mono(p1: MonotonePath, p2: MonotonePath) -> MonotonePath:
    """Greatest ``z`` in ``L_{n,m}`` with ``p1 ∧ z <= p2``."""
    _same_space(p1, p2)
    return MonotonePath(p1.m, tuple(_impl_from_right(p1.h, p2.h, p1.m)))


def _impl_blocks(h1, h2, fill: int) -> list[int]:
    n = len(h1)
    violations = [i for i in range(n) if h1[i] > h2[i]]
    out = [fill] * n
    start = 0
    for v in violations:
        out[start : v + 1] = [h2[v]] * (v + 1 - start)
        start = v + 1
    return out


def impl_mono_blocks(p1: MonotonePath, p2: MonotonePath) -> MonotonePath:
    """Block form: the stretch ending at each violation index takes ``p2``'s height
    there; everything after the last violation is ``m``."""
    _same_space(p1, p2)
    return MonotonePath(p1.m, tuple(_impl_blocks(p1.h, p2.h, p1.m)))


def impl_a(p1: HeightSeqA, p2: HeightSeqA) -> HeightSeqA:
    _same_space(p1, p2)
    # h_n^(1) = h_n^(2) = n, so the last entry is always h_n^(2)
    return HeightSeqA(tuple(_impl_from_right(p1.h, p2.h, p2.h[-1])))


def impl_a_blocks(p1: HeightSeqA, p2: HeightSeqA) -> HeightSeqA:
    _same_space(p1, p2)
    return HeightSeqA(tuple(_impl_blocks(p1.h, p2.h, p1.n)))


def impl_b(p1: HeightSeqB, p2: HeightSeqB) -> HeightSeqB:
    """Relative pseudocomplement in ``D_n^B``.

    The result length is ``k2`` when ``k1 < k2`` or when ``p1`` exceeds ``p2``
    at index ``k2``; otherwise it is one past the last violation index before
    ``k2`` (``k = 1``, i.e. the top, when there is none).
    """
    _same_space(p1, p2)
    n = p1.n
    h1, h2 = p1.h, p2.h
    k1, k2 = len(h1), len(h2)
    if k1 < k2:
        k = k2
        out = [0] * k
        for i in range(k - 1, -1, -1):
            if i >= k1 or h1[i] > h2[i]:
                out[i] = h2[i]
            else:
                out[i] = out[i + 1]
        return HeightSeqB(n, tuple(out))

    if h1[k2 - 1] > h2[k2 - 1]:
        k = k2
    else:
        k = max((i + 1 for i in range(k2 - 1) if h1[i] > h2[i]), default=0) + 1
    out = _impl_from_right(h1[:k], h2[:k], 2 * n - k + 1)
    return HeightSeqB(n, tuple(out))


def impl(p1: Path, p2: Path) -> Path:
    if isinstance(p1, HeightSeqB):
        return impl_b(p1, p2)
    if isinstance(p1, HeightSeqA):
        return impl_a(p1, p2)
    return impl_mono(p1, p2)


# ---------------------------------------------------------------------------
# Pseudocomplement
# ---------------------------------------------------------------------------


def pseudo_mono(p: MonotonePath) -> MonotonePath:
    if any(p.h):
        return MonotonePath(p.m, (0,) * p.n)
    return MonotonePath(p.m, (p.m,) * p.n)


def pseudo_a(p: HeightSeqA) -> HeightSeqA:
    """``h^c_i = h^c_{i+1}`` while ``h_i = i`` (``i < n``), otherwise ``i``."""
    n = p.n
    out = [0] * n
    for i in range(n, 0, -1):
        if i < n and p.h[i - 1] == i:
            out[i - 1] = out[i]
        else:
            out[i - 1] = i
    return HeightSeqA(tuple(out))


def pseudo_b(p: HeightSeqB) -> HeightSeqB:
    n, k, h = p.n, p.k, p.h
    if k < n or h[-1] == n + 1:
        length = n
    else:
        length = max((i for i in range(1, n) if h[i - 1] > i), default=0) + 1
    out = [0] * length
    for i in range(length, 0, -1):
        if i <= k and h[i - 1] > i:
            out[i - 1] = i
        elif i > k:
            out[i - 1] = i
        elif i == length:
            # only reached when k = n: the path ends at (n, n) and h_length = length
            out[i - 1] = 2 * n - length + 1
        else:
            out[i - 1] = out[i]
    return HeightSeqB(n, tuple(out))


def pseudo(p: Path) -> Path:
    if isinstance(p, HeightSeqB):
        return pseudo_b(p)
    if isinstance(p, HeightSeqA):
        return pseudo_a(p)
    return pseudo_mono(p)


# ---------------------------------------------------------------------------
# Regular elements
# ---------------------------------------------------------------------------


def _blocks_ok(h, upto: int) -> bool:
    # each h_i = c > i must be followed by h_{i+1} = ... = h_c = c
    for i in range(1, upto + 1):
        c = h[i - 1]
        if c > i:
            if c > len(h) or any(h[t - 1] != c for t in range(i, c + 1)):
                return False
    return True


def is_regular_a(p: HeightSeqA) -> bool:
    return _blocks_ok(p.h, p.n)


def is_regular_b(p: HeightSeqB) -> bool:
    n, k, h = p.n, p.k, p.h
    if h[-1] == n:
        return _blocks_ok(h, k - 1)
    if h[-1] == 2 * n - k + 1:
        before = h[k - 2] if k > 1 else 0
        return before == k - 1 and _blocks_ok(h, k - 2)
    return False


def is_regular_mono(p: MonotonePath) -> bool:
    return p == bottom_of(p) or p == top_of(p)


def is_regular(p: Path) -> bool:
    if isinstance(p, HeightSeqB):
        return is_regular_b(p)
    if isinstance(p, HeightSeqA):
        return is_regular_a(p)
    return is_regular_mono(p)


@dataclass(frozen=True)
class ReturnProfile:
    """Diagonal touch points of a Dyck path.

    ``returns`` holds every ``i`` with ``(i, i)`` on the path, including the
    trivial return at 0 (and at ``n`` for type A).  ``upper_end`` is ``j`` when
    a type B path ends at ``(j, 2n - j)`` with ``j < n``.
    """

    returns: tuple[int, ...]
    upper_end: int | None = None


def _word(p) -> str:
    return heights_to_word_b(p).steps if isinstance(p, HeightSeqB) else heights_to_word_a(p).steps


def lattice_points(p) -> set[tuple[int, int]]:
    """All ``(x, y)`` visited by the path, read off its word."""
    x = y = 0
    pts = {(0, 0)}
    for letter in _word(p):
        if letter == "u":
            y += 1
        else:
            x += 1
        pts.add((x, y))
    return pts


def return_profile(p) -> ReturnProfile:
    steps = _word(p)
    returns = [0]
    ups = 0
    for pos, letter in enumerate(steps, 1):
        ups += letter == "u"
        if pos % 2 == 0 and 2 * ups == pos:
            returns.append(pos // 2)
    upper = None
    if isinstance(p, HeightSeqB):
        j = 2 * p.n - steps.count("u")
        if j < p.n:
            upper = j
    return ReturnProfile(tuple(returns), upper)


def _consecutive_returns_ok(prof: ReturnProfile, pts) -> bool:
    rets = prof.returns
    return all((i, j) in pts for i, j in zip(rets, rets[1:]))


def is_regular_a_returns(p: HeightSeqA) -> bool:
    """Between consecutive returns ``i < j`` the path passes through ``(i, j)``."""
    return _consecutive_returns_ok(return_profile(p), lattice_points(p))


def is_regular_b_returns(p: HeightSeqB) -> bool:
    """As for type A, and the last return must coincide with the upper end, if any."""
    prof = return_profile(p)
    if not _consecutive_returns_ok(prof, lattice_points(p)):
        return False
    if prof.upper_end is not None:
        return prof.returns[-1] == prof.upper_end < p.n
    return True


def _regular_word(returns, n: int, upper_end: bool) -> str:
    # climb straight to (i, j) between consecutive returns, then run right to (j, j)
    parts = []
    for i, j in zip(returns, returns[1:]):
        parts.append("u" * (j - i) + "r" * (j - i))
    if upper_end:
        parts.append("u" * (2 * n - 2 * returns[-1]))
    return "".join(parts)


def regulars(family: str, n: int) -> list[Path]:
    """Construct the regular elements from subsets of non-trivial return positions.

    Type B adds, for each type A regular path, the variant whose last return
    is turned into an upper end.
    """
    check_guard(family, n)
    if family not in ("A", "B"):
        raise ValidationError(f"regulars is defined for families A and B, not {family!r}")
    out = []
    for size in range(n):
        for subset in combinations(range(1, n), size):
            if family == "A":
                out.append(word_to_heights_a(_regular_word((0, *subset, n), n, False)))
            else:
                out.append(word_to_heights_b(_regular_word((0, *subset, n), n, False)))
                out.append(word_to_heights_b(_regular_word((0, *subset), n, True)))
    return out


# ---------------------------------------------------------------------------
# Join-irreducibles
# ---------------------------------------------------------------------------


def irreducible_indices(p: Path) -> list[int]:
    """1-based ``i`` with ``h_i`` above its floor and ``h_i > h_{i-1}`` (``h_0 = 0``).

    The floor is ``i`` for Dyck paths and 0 for monotone paths; each such
    index marks a lower cover obtained by lowering ``h_i`` by one.
    """
    floor = (lambda i: 0) if isinstance(p, MonotonePath) else (lambda i: i)
    out = []
    prev = 0
    for i, x in enumerate(p.h, 1):
        if x > floor(i) and x > prev:
            out.append(i)
        prev = x
    return out


def is_join_irreducible(p: Path) -> bool:
    return len(irreducible_indices(p)) == 1


def is_bottom(p: Path) -> bool:
    return p == bottom(p.family, p.n, getattr(p, "m", None))
