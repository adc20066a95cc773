"""Definition-level reference computations and exhaustive cross-checks.

Everything here is built from ``leq``, ``meet`` and ``join`` alone; the
closed-form operators in :mod:`dyck_heyting.heyting` are only ever the thing
being checked, never a helper.  Meets and joins are themselves checked
against the definitional glb/lub before anything relies on them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np

from . import heyting as H
from .birkhoff import verify_birkhoff
from .lattice import (
    LatticeSnapshot,
    Path,
    closed_count,
    enumerate_family,
    join,
    leq,
    meet,
)
from .paths import (
    HeightSeqA,
    HeightSeqB,
    MonotonePath,
    a_as_b,
    embed_b_to_a,
    embed_b_to_a_word,
    psi,
    psi_word,
    restrict_a_to_b,
)

ALL_CHECKS = (
    "counts",
    "order",
    "glb_lub",
    "distributive",
    "impl",
    "pseudo",
    "regular",
    "irreducible",
    "psi",
    "embedding",
    "interval",
    "equalizer",
)
_NEEDS_TABLES = {"distributive", "impl", "pseudo", "regular", "irreducible"}


class HeytingViolation(AssertionError):
    """The definitional relative pseudocomplement does not exist for some pair."""

    def __init__(self, message: str, witness=()):
        super().__init__(message)
        self.witness = witness


# ---------------------------------------------------------------------------
# Tables
# ---------------------------------------------------------------------------


@dataclass(eq=False)
class OracleTables:
    snapshot: LatticeSnapshot
    le: np.ndarray
    meet: np.ndarray
    join: np.ndarray
    cover_lo: np.ndarray
    cover_hi: np.ndarray
    bottom: int
    top: int
    _impl: np.ndarray | None = field(default=None, repr=False)

    @property
    def size(self) -> int:
        return len(self.le)

    def lower_cover_counts(self) -> np.ndarray:
        return np.bincount(self.cover_hi, minlength=self.size)


def tables(snapshot: LatticeSnapshot) -> OracleTables:
    """Order, meet and join tables over snapshot ids, from the plain definitions."""
    cached = getattr(snapshot, "_oracle_tables", None)
    if cached is not None:
        return cached
    elems = snapshot.elements
    size = len(elems)
    index = {p: i for i, p in enumerate(elems)}
    le = np.array([[leq(p, q) for q in elems] for p in elems], dtype=bool).reshape(size, size)
    mt = np.empty((size, size), dtype=np.int64)
    jt = np.empty((size, size), dtype=np.int64)
    for a, p in enumerate(elems):
        for b in range(a, size):
            q = elems[b]
            mt[a, b] = mt[b, a] = index[meet(p, q)]
            jt[a, b] = jt[b, a] = index[join(p, q)]
    lt = le & ~np.eye(size, dtype=bool)
    ltf = lt.astype(np.float32)
    cov = lt & ~((ltf @ ltf) > 0)
    lo, hi = np.nonzero(cov)
    minimal = np.flatnonzero(le.all(axis=1))
    maximal = np.flatnonzero(le.all(axis=0))
    if len(minimal) != 1 or len(maximal) != 1:
        raise HeytingViolation("no unique least/greatest element", (minimal.tolist(), maximal.tolist()))
    out = OracleTables(snapshot, le, mt, jt, lo, hi, int(minimal[0]), int(maximal[0]))
    snapshot._oracle_tables = out
    return out


def _impl_row(t: OracleTables, a: int, ltf: np.ndarray) -> np.ndarray:
    # S[z, b]: a ∧ z <= b
    S = t.le[t.meet[a]]
    size = S.sum(axis=0)
    if (size == 0).any():
        b = int(np.flatnonzero(size == 0)[0])
        raise HeytingViolation("no z with a ∧ z <= b", (a, b))
    # downward closed: an element in S forces its lower covers into S
    bad = S[t.cover_hi] & ~S[t.cover_lo]
    if bad.any():
        e, b = np.argwhere(bad)[0]
        raise HeytingViolation("solution set not downward closed", (a, int(b), int(t.cover_hi[e])))
    # z is the greatest element of S iff every member of S is <= z
    counts = ltf @ S.astype(np.float32)
    greatest = S & (counts == size)
    nmax = greatest.sum(axis=0)
    if (nmax != 1).any():
        b = int(np.flatnonzero(nmax != 1)[0])
        raise HeytingViolation("solution set has no unique maximum", (a, b))
    return greatest.argmax(axis=0)


def oracle_impl_table(snapshot: LatticeSnapshot) -> np.ndarray:
    """``[a, b]`` = id of the greatest ``z`` with ``a ∧ z <= b``, for every pair.

    For each pair the solution set is checked to be nonempty, downward closed
    and to have a greatest element.  Closure under joins follows: two members
    lie below the greatest one, hence so does their join, and downward
    closure puts it back in the set.
    """
    t = tables(snapshot)
    if t._impl is None:
        ltf = t.le.T.astype(np.float32)
        t._impl = np.stack([_impl_row(t, a, ltf) for a in range(t.size)])
    return t._impl


def oracle_impl(snapshot: LatticeSnapshot, p1: Path, p2: Path) -> Path:
    t = tables(snapshot)
    a, b = snapshot.id_of(p1), snapshot.id_of(p2)
    if t._impl is not None:
        return snapshot.elements[t._impl[a, b]]
    row = _impl_row(t, a, t.le.T.astype(np.float32))
    return snapshot.elements[row[b]]


def oracle_join_irreducible(snapshot: LatticeSnapshot, p: Path) -> bool:
    """True iff ``p`` has exactly one lower cover."""
    t = tables(snapshot)
    return int(t.lower_cover_counts()[snapshot.id_of(p)]) == 1


def boolean_rank(elements, le) -> int | None:
    """``r`` if the poset is isomorphic to the lattice of subsets of an ``r``-set, else None.

    Each element is sent to the set of atoms below it; the poset is Boolean
    iff that map is an order isomorphism onto all subsets.
    """
    elements = list(elements)
    bots = [x for x in elements if all(le(x, y) for y in elements)]
    if len(bots) != 1:
        return None
    bot = bots[0]
    rest = [x for x in elements if x != bot]
    atoms = [a for a in rest if not any(b != a and le(b, a) for b in rest)]
    if len(elements) != 2 ** len(atoms):
        return None
    sig = {x: frozenset(i for i, a in enumerate(atoms) if le(a, x)) for x in elements}
    if len(set(sig.values())) != len(elements):
        return None
    for x in elements:
        for y in elements:
            if le(x, y) != (sig[x] <= sig[y]):
                return None
    return len(atoms)


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int = 0
    witness: str | None = None
    note: str = ""

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        out = f"  {self.name:<13} {status:<5} {self.checked} cases"
        if self.note:
            out += f"  ({self.note})"
        if self.witness:
            out += f"\n    witness: {self.witness}"
        return out


@dataclass
class Report:
    family: str
    params: tuple[int, ...]
    results: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def title(self) -> str:
        if self.family == "mono":
            return f"L_{{{self.params[0]},{self.params[1]}}}"
        return f"D_{self.params[0]}^{self.family}"

    def to_text(self) -> str:
        head = f"{self.title()}: {'pass' if self.ok else 'FAIL'}"
        return "\n".join([head] + [r.line() for r in self.results])

    def to_dict(self) -> dict:
        return {
            "family": self.family.lower(),
            "params": list(self.params),
            "ok": self.ok,
            "checks": [
                {"name": r.name, "passed": r.passed, "checked": r.checked, "witness": r.witness, "note": r.note}
                for r in self.results
            ],
        }


class _Check:
    """Accumulates cases and keeps the first failing witness."""

    def __init__(self, name: str):
        self.name = name
        self.count = 0
        self.witness = None
        self.note = ""

    def case(self, ok, witness=None) -> bool:
        self.count += 1
        if not ok and self.witness is None:
            self.witness = witness() if callable(witness) else str(witness)
        return bool(ok)

    def many(self, ok_array: np.ndarray, describe) -> None:
        """Vectorised cases: ``describe(index_tuple)`` builds the witness for the first failure."""
        self.count += int(ok_array.size)
        if self.witness is None and not ok_array.all():
            self.witness = describe(tuple(int(x) for x in np.argwhere(~ok_array)[0]))

    def result(self) -> CheckResult:
        return CheckResult(self.name, self.witness is None, self.count, self.witness, self.note)


# ---------------------------------------------------------------------------
# Individual checks
# ---------------------------------------------------------------------------


def _fmt(snap: LatticeSnapshot, *ids) -> str:
    return " ; ".join(str(snap.elements[i]) for i in ids)


def _check_counts(snap: LatticeSnapshot) -> CheckResult:
    c = _Check("counts")
    expected = closed_count(snap.family, *snap.params)
    c.case(len(snap) == expected, f"{len(snap)} elements, expected {expected}")
    c.note = f"{len(snap)} elements"
    return c.result()


def _check_order(snap: LatticeSnapshot, t: OracleTables) -> CheckResult:
    c = _Check("order")
    le = t.le
    c.many(np.diag(le), lambda ix: f"not reflexive at {_fmt(snap, ix[0])}")
    anti = ~(le & le.T) | np.eye(t.size, dtype=bool)
    c.many(anti, lambda ix: f"not antisymmetric: {_fmt(snap, *ix)}")
    lef = le.astype(np.float32)
    trans = ~((lef @ lef) > 0) | le
    c.many(trans, lambda ix: f"not transitive: {_fmt(snap, *ix)}")
    c.many(snap.leq_matrix == le, lambda ix: f"vectorised order disagrees with leq: {_fmt(snap, *ix)}")
    own = frozenset(zip(t.cover_lo.tolist(), t.cover_hi.tolist()))
    c.case(own == snap.covers, "snapshot covers differ from the reduction of leq")
    c.case(snap.elements[t.bottom] == snap.bottom and snap.elements[t.top] == snap.top, "bottom/top mismatch")
    return c.result()


def _check_glb_lub(snap: LatticeSnapshot, t: OracleTables) -> CheckResult:
    c = _Check("glb_lub")
    le, mt, jt = t.le, t.meet, t.join
    idx = np.arange(t.size)
    for a in range(t.size):
        m = mt[a]
        j = jt[a]
        c.many(le[m, a] & le[m, idx], lambda ix: f"meet not a lower bound: {_fmt(snap, a, ix[0])}")
        c.many(le[a, j] & le[idx, j], lambda ix: f"join not an upper bound: {_fmt(snap, a, ix[0])}")
        # common lower bounds z of (a, b) must lie below meet(a, b)
        lower = le[:, a][:, None] & le
        c.many(~lower | le[:, m], lambda ix: f"meet not greatest: z={_fmt(snap, ix[0])} a,b={_fmt(snap, a, ix[1])}")
        upper = le[a, :][:, None] & le.T
        c.many(~upper | le[j, :].T, lambda ix: f"join not least: z={_fmt(snap, ix[0])} a,b={_fmt(snap, a, ix[1])}")
    return c.result()


def _check_distributive(snap: LatticeSnapshot, t: OracleTables) -> CheckResult:
    c = _Check("distributive")
    mt, jt = t.meet, t.join
    for a in range(t.size):
        lhs = mt[a][jt]  # a ∧ (b ∨ c)
        rhs = jt[mt[a][:, None], mt[a][None, :]]  # (a ∧ b) ∨ (a ∧ c)
        c.many(lhs == rhs, lambda ix: f"a ∧ (b ∨ c) != (a ∧ b) ∨ (a ∧ c) at {_fmt(snap, a, *ix)}")
    return c.result()


def _impl_closed_table(snap: LatticeSnapshot) -> np.ndarray:
    elems = snap.elements
    return np.array([[snap.id_of(H.impl(p, q)) for q in elems] for p in elems], dtype=np.int64)


def _check_impl(snap: LatticeSnapshot, t: OracleTables) -> CheckResult:
    c = _Check("impl")
    oracle = oracle_impl_table(snap)
    closed = _impl_closed_table(snap)
    c.many(closed == oracle, lambda ix: f"closed form {_fmt(snap, closed[ix])} vs oracle {_fmt(snap, oracle[ix])} for {_fmt(snap, *ix)}")
    elems = snap.elements
    if snap.family in ("A", "mono"):
        blocks = H.impl_a_blocks if snap.family == "A" else H.impl_mono_blocks
        for a, p in enumerate(elems):
            for b, q in enumerate(elems):
                c.case(blocks(p, q) == elems[closed[a, b]], lambda: f"block form differs for {p} ; {q}")
    # residuation: a ∧ z <= b  iff  z <= (a -> b)
    for a in range(t.size):
        lhs = t.le[t.meet[a]]  # [z, b]
        rhs = t.le[:, oracle[a]]  # [z, b]
        c.many(lhs == rhs, lambda ix: f"residuation fails at a={_fmt(snap, a)} z,b={_fmt(snap, *ix)}")
    c.many(oracle[t.le] == t.top, lambda ix: "p <= q but p -> q is not the top")
    c.many(np.diag(closed) == t.top, lambda ix: f"p -> p is not the top for {_fmt(snap, ix[0])}")
    return c.result()


def _check_pseudo(snap: LatticeSnapshot, t: OracleTables) -> CheckResult:
    c = _Check("pseudo")
    oracle = oracle_impl_table(snap)
    bot = snap.elements[t.bottom]
    for i, p in enumerate(snap.elements):
        pc = H.pseudo(p)
        c.case(pc == H.impl(p, bot), lambda: f"pseudo({p}) = {pc} but impl(p, bottom) = {H.impl(p, bot)}")
        c.case(pc == snap.elements[oracle[i, t.bottom]], lambda: f"pseudo({p}) = {pc} disagrees with oracle")
        c.case(H.pseudo(H.pseudo(pc)) == pc, lambda: f"triple negation differs from single for {p}")
    return c.result()


def _check_regular(snap: LatticeSnapshot, t: OracleTables) -> CheckResult:
    c = _Check("regular")
    oracle = oracle_impl_table(snap)
    elems = snap.elements
    neg = oracle[:, t.bottom]
    regular_ids = [i for i in range(t.size) if neg[neg[i]] == i]
    regular = [elems[i] for i in regular_ids]
    for i, p in enumerate(elems):
        dn = neg[neg[i]] == i
        c.case(H.is_regular(p) == dn, lambda: f"formula says {H.is_regular(p)} for {p}, double negation says {dn}")
        if snap.family == "A":
            c.case(H.is_regular_a_returns(p) == dn, lambda: f"return criterion disagrees for {p}")
        elif snap.family == "B":
            c.case(H.is_regular_b_returns(p) == dn, lambda: f"return criterion disagrees for {p}")
    n = snap.n
    if snap.family == "mono":
        c.case(set(regular) == {snap.bottom, snap.top}, lambda: f"regular set {[str(p) for p in regular]}")
    else:
        expected = 2 ** (n - 1) if snap.family == "A" else 2**n
        c.case(len(regular) == expected, f"{len(regular)} regular elements, expected {expected}")
        built = H.regulars(snap.family, n)
        c.case(len(built) == len(set(built)) and set(built) == set(regular), "constructed regulars differ from the filter")
        rank = boolean_rank(regular_ids, lambda x, y: bool(t.le[x, y]))
        c.case(rank == (n - 1 if snap.family == "A" else n), f"regular subposet is not Boolean of rank {n} (got {rank})")
    c.note = f"{len(regular)} regular"
    return c.result()


def _check_irreducible(snap: LatticeSnapshot, t: OracleTables) -> CheckResult:
    c = _Check("irreducible")
    lower = t.lower_cover_counts()
    le, jt = t.le, t.join
    count = 0
    for i, p in enumerate(snap.elements):
        formula = H.is_join_irreducible(p)
        unique_cover = lower[i] == 1
        row = le[i]
        prime = i != t.bottom and bool((~row[jt] | row[:, None] | row[None, :]).all())
        count += formula
        c.case(formula == unique_cover == prime, lambda: f"{p}: formula {formula}, unique cover {unique_cover}, join-prime {prime}")
    n = snap.n
    expected = {"A": n * (n - 1) // 2, "B": n * n, "mono": n * (snap.m or 0)}[snap.family]
    c.case(count == expected, f"{count} join-irreducibles, expected {expected}")
    c.note = f"{count} irreducible"
    return c.result()


def _check_psi(snap: LatticeSnapshot) -> CheckResult:
    c = _Check("psi")
    elems = snap.elements
    images = {}
    for p in elems:
        q = psi(p)
        images[p] = q
        c.case(q == psi_word(p), lambda: f"psi formula {q} vs word construction {psi_word(p)} for {p}")
        c.case(psi(q) == p, lambda: f"psi not an involution at {p}")
    for p in elems:
        for q in elems:
            c.case(leq(p, q) == leq(images[p], images[q]), lambda: f"psi not an order automorphism at {p} ; {q}")
    return c.result()


def _check_embedding(snap: LatticeSnapshot) -> CheckResult:
    c = _Check("embedding")
    n = snap.n
    elems = snap.elements
    if snap.family == "A":
        # D_n^A sits inside D_n^B as a sublattice, but its implication has a different top
        top_a, top_b = HeightSeqA((n,) * n), HeightSeqB(n, (2 * n,))
        for p in elems:
            pb = a_as_b(p)
            c.case(H.impl_a(p, p) == top_a and H.impl_b(pb, pb) == top_b, lambda: f"tops do not differ at {p}")
            for q in elems:
                qb = a_as_b(q)
                c.case(a_as_b(meet(p, q)) == meet(pb, qb) and a_as_b(join(p, q)) == join(pb, qb),
                       lambda: f"not a sublattice at {p} ; {q}")
        c.note = "sublattice, not a Heyting subalgebra"
        return c.result()

    emb = {}
    for p in elems:
        q = embed_b_to_a(p)
        emb[p] = q
        c.case(q == embed_b_to_a_word(p), lambda: f"embed formula {q} vs concatenation {embed_b_to_a_word(p)} for {p}")
        c.case(psi(q) == q, lambda: f"embed({p}) = {q} is not centrally symmetric")
        c.case(restrict_a_to_b(q) == p, lambda: f"restrict does not invert embed at {p}")
    c.case(emb[snap.bottom] == HeightSeqA(tuple(range(1, 2 * n + 1))), "bottom not preserved")
    c.case(emb[snap.top] == HeightSeqA((2 * n,) * (2 * n)), "top not preserved")
    for p in elems:
        for q in elems:
            ep, eq = emb[p], emb[q]
            c.case(leq(p, q) == leq(ep, eq), lambda: f"order not reflected at {p} ; {q}")
            c.case(emb[meet(p, q)] == meet(ep, eq), lambda: f"meet not preserved at {p} ; {q}")
            c.case(emb[join(p, q)] == join(ep, eq), lambda: f"join not preserved at {p} ; {q}")
            c.case(emb[H.impl_b(p, q)] == H.impl_a(ep, eq), lambda: f"implication not preserved at {p} ; {q}")
    return c.result()


def _interval_iso(c: _Check, n: int, lower: tuple, shift: int, dyck: LatticeSnapshot) -> None:
    # [lower, top] in L_{n,n} against a type A lattice whose sequences map by h -> h[:n] - shift
    grid = enumerate_family("mono", n, n)
    lo = MonotonePath(n, lower)
    interval = [x for x in grid if leq(lo, x)]
    image = {p: MonotonePath(n, tuple(x - shift for x in p.h[:n])) for p in dyck}
    c.case(len(set(image.values())) == len(dyck), f"shift map not injective for D_{dyck.n}^A")
    c.case(set(image.values()) == set(interval), f"D_{dyck.n}^A does not map onto [{lo}, top] in L_{n},{n}")
    for p in dyck:
        for q in dyck:
            c.case(leq(p, q) == leq(image[p], image[q]), lambda: f"order differs at {p} ; {q}")


def _check_interval(snap: LatticeSnapshot) -> CheckResult:
    c = _Check("interval")
    n = snap.n
    _interval_iso(c, n, tuple(range(1, n + 1)), 0, enumerate_family("A", n))
    _interval_iso(c, n, tuple(range(0, n)), 1, enumerate_family("A", n + 1))
    return c.result()


def _check_equalizer(snap: LatticeSnapshot) -> CheckResult:
    """The psi-fixed paths form a Heyting subalgebra; for even semilength they biject with type B."""
    c = _Check("equalizer")
    if snap.family == "B":
        host, half = enumerate_family("A", 2 * snap.n), snap
    else:
        host = snap
        half = enumerate_family("B", snap.n // 2) if snap.n % 2 == 0 else None
    fixed = [q for q in host if psi(q) == q]
    fixed_set = set(fixed)
    if half is not None:
        c.case(len(fixed) == comb(host.n, host.n // 2), f"{len(fixed)} fixed paths, expected binom({host.n},{host.n // 2})")
        c.case(sorted(map(restrict_a_to_b, fixed), key=half.id_of) == list(half.elements), "restriction is not a bijection onto D^B")
    c.case(host.bottom in fixed_set and host.top in fixed_set, "bounds are not fixed")
    for p in fixed:
        for q in fixed:
            c.case(meet(p, q) in fixed_set, lambda: f"meet leaves the fixed set at {p} ; {q}")
            c.case(join(p, q) in fixed_set, lambda: f"join leaves the fixed set at {p} ; {q}")
            c.case(H.impl_a(p, q) in fixed_set, lambda: f"implication leaves the fixed set at {p} ; {q}")
    c.note = f"{len(fixed)} fixed paths in D_{host.n}^A"
    return c.result()


def _skipped(name: str, why: str) -> CheckResult:
    return CheckResult(name, True, 0, None, f"skipped: {why}")


# ---------------------------------------------------------------------------
# Driver
# ---------------------------------------------------------------------------


def normalize_checks(checks) -> list[str]:
    if checks is None or checks == "all" or checks == ["all"]:
        return list(ALL_CHECKS)
    checks = list(checks)
    unknown = [x for x in checks if x not in ALL_CHECKS]
    if unknown:
        raise ValueError(f"unknown checks {unknown}; choose from {', '.join(ALL_CHECKS)}")
    wanted = set(checks)
    if wanted & _NEEDS_TABLES:
        wanted |= {"order", "glb_lub"}
    return [x for x in ALL_CHECKS if x in wanted]


def verify_family(family: str, params, checks=None) -> Report:
    """Run the selected exhaustive checks on one enumerated lattice.

    ``params`` is ``(n,)`` for A/B and ``(n, m)`` for mono.  Checks run in
    dependency order; a check that does not apply to the family is reported
    as skipped.
    """
    params = tuple(params) if not isinstance(params, int) else (params,)
    snap = enumerate_family(family, *params)
    family = snap.family
    rep = Report(family, snap.params)
    t = None
    for name in normalize_checks(checks):
        if name in _NEEDS_TABLES | {"order", "glb_lub"} and t is None:
            t = tables(snap)
        if name == "counts":
            res = _check_counts(snap)
        elif name == "order":
            res = _check_order(snap, t)
        elif name == "glb_lub":
            res = _check_glb_lub(snap, t)
        elif name == "distributive":
            res = _check_distributive(snap, t)
        elif name == "impl":
            res = _check_impl(snap, t)
        elif name == "pseudo":
            res = _check_pseudo(snap, t)
        elif name == "regular":
            res = _check_regular(snap, t)
        elif name == "irreducible":
            res = _check_irreducible(snap, t)
            if family in ("A", "B"):
                b = verify_birkhoff(family, snap.n)
                res.passed = res.passed and b.ok
                if not b.ok and res.witness is None:
                    res.witness = str(b.failures[0])
                res.note += f"; birkhoff {'pass' if b.ok else 'FAIL'}"
        elif name == "psi":
            res = _check_psi(snap) if family == "A" else _skipped(name, "type A only")
        elif name == "embedding":
            res = _check_embedding(snap) if family in ("A", "B") else _skipped(name, "Dyck families only")
        elif name == "interval":
            if family == "A" or (family == "mono" and params[0] == params[1]):
                res = _check_interval(snap)
            else:
                res = _skipped(name, "needs family A or mono with n = m")
        elif name == "equalizer":
            res = _check_equalizer(snap) if family in ("A", "B") else _skipped(name, "Dyck families only")
        rep.results.append(res)
    return rep


def _verify_star(args):
    return verify_family(*args)


def verify_range(family: str, sizes, checks=None, parallel: bool = False) -> list[Report]:
    """``verify_family`` over several parameter tuples, optionally in worker processes.

    Reports come back in the order of ``sizes`` either way.
    """
    jobs = [(family, s, checks) for s in sizes]
    if not parallel or len(jobs) < 2:
        return [verify_family(*j) for j in jobs]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor() as pool:
        return list(pool.map(_verify_star, jobs))
