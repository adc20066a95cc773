"""Path encodings: Dyck words, height sequences and the maps between them.

Three families are supported:

* type A Dyck paths of semilength ``n`` (``HeightSeqA``), ending at ``(n, n)``;
* type B Dyck paths of semilength ``n`` (``HeightSeqB``), ``2n`` steps with a
  free endpoint;
* monotone lattice paths in the ``n x m`` grid (``MonotonePath``).

Up-steps are written ``u`` and right-steps ``r``.  A point ``(x, y)`` on a path
means ``x`` right-steps and ``y`` up-steps have been taken.  Sequences are
1-indexed in docstrings and 0-indexed in code.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar

__all__ = [
    "ValidationError",
    "DomainError",
    "DyckWord",
    "HeightSeqA",
    "HeightSeqB",
    "MonotonePath",
    "parse_seq",
    "format_seq",
    "word_to_heights_a",
    "heights_to_word_a",
    "word_to_heights_b",
    "heights_to_word_b",
    "mono_word",
    "complement_reverse",
    "psi",
    "psi_word",
    "embed_b_to_a",
    "embed_b_to_a_word",
    "restrict_a_to_b",
    "a_as_b",
]


class ValidationError(ValueError):
    """An encoding violates one of its defining constraints.

    ``index`` is the 1-based position of the first offending letter or entry
    (``None`` when the failure is not positional, e.g. a length mismatch).
    """

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class DomainError(ValueError):
    """Arguments are individually valid but outside an operation's domain."""


def parse_seq(text: str) -> tuple[int, ...]:
    """Parse ``"3,5,7"`` into ``(3, 5, 7)``."""
    text = text.strip()
    if not text:
        raise ValidationError("empty sequence")
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValidationError(f"not a comma-separated integer sequence: {text!r}") from None


def format_seq(h) -> str:
    return ",".join(str(x) for x in h)


# ---------------------------------------------------------------------------
# Dyck words
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DyckWord:
    steps: str
    family: str = "A"

    def __post_init__(self):
        steps = self.steps.lower()
        object.__setattr__(self, "steps", steps)
        if self.family not in ("A", "B"):
            raise ValidationError(f"unknown word family {self.family!r}")
        for pos, letter in enumerate(steps, 1):
            if letter not in "ur":
                raise ValidationError(f"letter {letter!r} at position {pos} is not u or r", pos)
        if not steps or len(steps) % 2:
            raise ValidationError(f"word length {len(steps)} is not a positive even number")
        ups = 0
        for pos, letter in enumerate(steps, 1):
            ups += letter == "u"
            if 2 * ups < pos:
                raise ValidationError(f"prefix of length {pos} has more r than u", pos)
        if self.family == "A" and 2 * ups != len(steps):
            raise ValidationError(
                f"type A word needs equal letter counts, got {ups} u and {len(steps) - ups} r"
            )

    @property
    def n(self) -> int:
        return len(self.steps) // 2

    def __str__(self):
        return self.steps

    def __len__(self):
        return len(self.steps)


def _coerce_word(w, family: str) -> DyckWord:
    if isinstance(w, DyckWord):
        if w.family != family:
            w = DyckWord(w.steps, family)
        return w
    return DyckWord(w, family)


def _heights_before_rs(steps: str) -> list[int]:
    out = []
    ups = 0
    for letter in steps:
        if letter == "u":
            ups += 1
        else:
            out.append(ups)
    return out


def _spell(h, n_r: int, tail_ups: int = 0) -> str:
    """u^{h_1} r u^{h_2-h_1} r ... for the first ``n_r`` entries, then ``tail_ups`` u's."""
    parts = []
    prev = 0
    for x in h[:n_r]:
        parts.append("u" * (x - prev) + "r")
        prev = x
    parts.append("u" * tail_ups)
    return "".join(parts)


def complement_reverse(steps: str) -> str:
    """Swap u and r, then reverse."""
    return steps.translate(str.maketrans("ur", "ru"))[::-1]


# ---------------------------------------------------------------------------
# Height sequences
# ---------------------------------------------------------------------------


def _check_ints(h):
    for pos, x in enumerate(h, 1):
        if isinstance(x, bool) or not isinstance(x, int):
            raise ValidationError(f"entry {pos} is not an integer: {x!r}", pos)


@dataclass(frozen=True)
class HeightSeqA:
    """Type A Dyck path: weakly increasing with ``i <= h_i <= n``."""

    h: tuple[int, ...]
    family: ClassVar[str] = "A"

    def __post_init__(self):
        h = tuple(self.h)
        object.__setattr__(self, "h", h)
        _check_ints(h)
        n = len(h)
        if n < 1:
            raise ValidationError("semilength must be at least 1")
        for i in range(n):
            if i and h[i] < h[i - 1]:
                raise ValidationError(f"h_{i + 1}={h[i]} < h_{i}={h[i - 1]}: not weakly increasing", i + 1)
            if h[i] < i + 1:
                raise ValidationError(f"h_{i + 1}={h[i]} < {i + 1}: path dips below the diagonal", i + 1)
            if h[i] > n:
                raise ValidationError(f"h_{i + 1}={h[i]} > n={n}", i + 1)

    @property
    def n(self) -> int:
        return len(self.h)

    @property
    def params(self) -> tuple[int, ...]:
        return (self.n,)

    def __str__(self):
        return format_seq(self.h)


@dataclass(frozen=True)
class HeightSeqB:
    """Type B Dyck path of semilength ``n`` with ``k = len(h)`` entries.

    ``h_1 <= ... <= h_{k-1} <= 2n-k``, ``h_i >= i`` and ``h_k`` is ``2n-k``
    (word ends with r) or ``2n-k+1`` (word ends with u).
    """

    n: int
    h: tuple[int, ...]
    family: ClassVar[str] = "B"

    def __post_init__(self):
        h = tuple(self.h)
        object.__setattr__(self, "h", h)
        _check_ints(h)
        n, k = self.n, len(h)
        if n < 1:
            raise ValidationError("semilength must be at least 1")
        if not 1 <= k <= n:
            raise ValidationError(f"length k={k} outside 1..n={n}")
        for i in range(k):
            if h[i] < i + 1:
                raise ValidationError(f"h_{i + 1}={h[i]} < {i + 1}: path dips below the diagonal", i + 1)
            if i < k - 1:
                if i and h[i] < h[i - 1]:
                    raise ValidationError(f"h_{i + 1}={h[i]} < h_{i}={h[i - 1]}: not weakly increasing", i + 1)
                if h[i] > 2 * n - k:
                    raise ValidationError(f"h_{i + 1}={h[i]} > 2n-k={2 * n - k}", i + 1)
        if h[-1] not in (2 * n - k, 2 * n - k + 1):
            raise ValidationError(f"last entry h_{k}={h[-1]} not in {{{2 * n - k}, {2 * n - k + 1}}}", k)

    @property
    def k(self) -> int:
        return len(self.h)

    @property
    def ends_with_up(self) -> bool:
        return self.h[-1] == 2 * self.n - self.k + 1

    @property
    def params(self) -> tuple[int, ...]:
        return (self.n,)

    def __str__(self):
        return format_seq(self.h)


@dataclass(frozen=True)
class MonotonePath:
    """Monotone path from ``(0, 0)`` to ``(n, m)``: ``0 <= h_1 <= ... <= h_n <= m``."""

    m: int
    h: tuple[int, ...]
    family: ClassVar[str] = "mono"

    def __post_init__(self):
        h = tuple(self.h)
        object.__setattr__(self, "h", h)
        _check_ints(h)
        if len(h) < 1:
            raise ValidationError("width must be at least 1")
        if self.m < 0:
            raise ValidationError(f"height m={self.m} is negative")
        for i, x in enumerate(h):
            if x < 0:
                raise ValidationError(f"h_{i + 1}={x} is negative", i + 1)
            if i and x < h[i - 1]:
                raise ValidationError(f"h_{i + 1}={x} < h_{i}={h[i - 1]}: not weakly increasing", i + 1)
            if x > self.m:
                raise ValidationError(f"h_{i + 1}={x} > m={self.m}", i + 1)

    @property
    def n(self) -> int:
        return len(self.h)

    @property
    def params(self) -> tuple[int, ...]:
        return (self.n, self.m)

    def __str__(self):
        return format_seq(self.h)


# ---------------------------------------------------------------------------
# Word <-> heights
# ---------------------------------------------------------------------------


def word_to_heights_a(w) -> HeightSeqA:
    """``h_i`` = number of u's before the i-th r."""
    w = _coerce_word(w, "A")
    return HeightSeqA(tuple(_heights_before_rs(w.steps)))


def heights_to_word_a(p: HeightSeqA) -> DyckWord:
    return DyckWord(_spell(p.h, p.n), "A")


def word_to_heights_b(w) -> HeightSeqB:
    """Height sequence of a type B word.

    ``k`` is the number of r's, plus one when the word ends with u; in that
    case the extra last entry is the total number of u's.
    """
    w = _coerce_word(w, "B")
    h = _heights_before_rs(w.steps)
    if w.steps[-1] == "u":
        h.append(w.steps.count("u"))
    return HeightSeqB(w.n, tuple(h))


def heights_to_word_b(p: HeightSeqB) -> DyckWord:
    if p.ends_with_up:
        steps = _spell(p.h, p.k - 1, p.h[-1] - (p.h[-2] if p.k > 1 else 0))
    else:
        steps = _spell(p.h, p.k)
    return DyckWord(steps, "B")


def mono_word(p: MonotonePath) -> str:
    """Step word of a monotone path; not a Dyck word in general."""
    return _spell(p.h, p.n, p.m - p.h[-1])


# ---------------------------------------------------------------------------
# The reflection psi and the type B embedding
# ---------------------------------------------------------------------------


def _reflect_blocks(h, size: int, out: list[int]) -> None:
    # out[size-h_i+1 .. size-h_{i-1}] = size-i+1 whenever h_i > h_{i-1}; out is 1-indexed
    prev = 0
    for i, x in enumerate(h, 1):
        if x > prev:
            for t in range(size - x + 1, size - prev + 1):
                out[t] = size - i + 1
        prev = x


def psi(p: HeightSeqA) -> HeightSeqA:
    """Reflect a type A path about the anti-diagonal ``y = n - x``."""
    n = p.n
    out = [0] * (n + 1)
    _reflect_blocks(p.h, n, out)
    return HeightSeqA(tuple(out[1:]))


def psi_word(p: HeightSeqA) -> HeightSeqA:
    """``psi`` computed on the word: complement every letter, then reverse."""
    w = heights_to_word_a(p)
    return word_to_heights_a(complement_reverse(w.steps))


def embed_b_to_a(p: HeightSeqB) -> HeightSeqA:
    """The centrally symmetric type A path of semilength ``2n`` extending ``p``."""
    size = 2 * p.n
    out = [0] * (size + 1)
    _reflect_blocks(p.h, size, out)
    out[1 : p.k + 1] = p.h
    return HeightSeqA(tuple(out[1:]))


def embed_b_to_a_word(p: HeightSeqB) -> HeightSeqA:
    w = heights_to_word_b(p).steps
    return word_to_heights_a(w + complement_reverse(w))


def restrict_a_to_b(q: HeightSeqA) -> HeightSeqB:
    """Inverse of ``embed_b_to_a``: the first half of a centrally symmetric path."""
    if q.n % 2:
        raise DomainError(f"semilength {q.n} is odd; no type B restriction")
    if psi(q) != q:
        raise DomainError(f"{q} is not centrally symmetric (psi(q) = {psi(q)})")
    steps = heights_to_word_a(q).steps
    return word_to_heights_b(steps[: q.n])


def a_as_b(p: HeightSeqA) -> HeightSeqB:
    """View a type A path as an element of ``D_n^B``."""
    return HeightSeqB(p.n, p.h)
