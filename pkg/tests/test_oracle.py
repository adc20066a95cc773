import numpy as np
import pytest

from conftest import brute_impl
from dyck_heyting import heyting as H
from dyck_heyting import oracle
from dyck_heyting.lattice import enumerate_family, top
from dyck_heyting.oracle import (
    ALL_CHECKS,
    HeytingViolation,
    OracleTables,
    normalize_checks,
    oracle_impl,
    oracle_impl_table,
    oracle_join_irreducible,
    verify_family,
    verify_range,
)
from dyck_heyting.paths import HeightSeqA, HeightSeqB


def test_oracle_impl_examples():
    a4 = enumerate_family("A", 4)
    assert oracle_impl(a4, HeightSeqA((2, 3, 3, 4)), a4.bottom) == HeightSeqA((1, 2, 4, 4))
    b3 = enumerate_family("B", 3)
    assert oracle_impl(b3, HeightSeqB(3, (3, 5)), HeightSeqB(3, (1, 2, 4))) == HeightSeqB(3, (1, 2, 4))
    for snap in (a4, b3, enumerate_family("mono", 2, 3)):
        for p in snap:
            assert oracle_impl(snap, p, p) == snap.top


@pytest.mark.parametrize("family, params", [("A", (4,)), ("B", (3,)), ("mono", (3, 2))])
def test_oracle_table_matches_brute_force(family, params):
    snap = enumerate_family(family, *params)
    table = oracle_impl_table(snap)
    for a, p in enumerate(snap):
        for b, q in enumerate(snap):
            assert snap.elements[table[a, b]] == brute_impl(snap, p, q)


def test_oracle_join_irreducible_examples():
    a4 = enumerate_family("A", 4)
    assert not oracle_join_irreducible(a4, a4.bottom)
    assert oracle_join_irreducible(a4, HeightSeqA((1, 3, 3, 4)))
    assert not oracle_join_irreducible(a4, HeightSeqA((2, 3, 3, 4)))


def _pentagon_tables():
    # 0 < a < b < 1 and 0 < c < 1; not distributive, so not Heyting
    names = ["0", "a", "b", "c", "1"]
    below = {"0": "0", "a": "0a", "b": "0ab", "c": "0c", "1": "0abc1"}
    le = np.array([[x in below[y] for y in names] for x in names])
    size = len(names)
    meet = np.empty((size, size), dtype=np.int64)
    join = np.empty((size, size), dtype=np.int64)
    for i in range(size):
        for j in range(size):
            lower = [k for k in range(size) if le[k, i] and le[k, j]]
            upper = [k for k in range(size) if le[i, k] and le[j, k]]
            meet[i, j] = max(lower, key=lambda k: le[lower, k].sum())
            join[i, j] = min(upper, key=lambda k: le[k, upper].sum())
    lt = le & ~np.eye(size, dtype=bool)
    cov = lt & ~((lt.astype(int) @ lt.astype(int)) > 0)
    lo, hi = np.nonzero(cov)
    return OracleTables(None, le, meet, join, lo, hi, 0, 4)


def test_oracle_rejects_non_heyting_lattice():
    t = _pentagon_tables()
    ltf = t.le.T.astype(np.float32)
    with pytest.raises(HeytingViolation) as exc:
        for a in range(t.size):
            oracle._impl_row(t, a, ltf)
    assert exc.value.witness


def test_verify_family_examples():
    rep = verify_family("A", (5,))
    assert rep.ok, rep.to_text()
    assert [r.name for r in rep.results] == list(ALL_CHECKS)
    rep = verify_family("B", 4)
    assert rep.ok, rep.to_text()
    rep = verify_family("mono", (3, 3), ["counts"])
    assert rep.ok and rep.results[0].note == "20 elements"


@pytest.mark.parametrize(
    "family, params",
    [("A", (n,)) for n in range(1, 7)]
    + [("B", (n,)) for n in range(1, 6)]
    + [("mono", (n, m)) for n in range(1, 5) for m in range(0, 5)],
)
def test_verify_family_all_checks(family, params):
    rep = verify_family(family, params)
    assert rep.ok, rep.to_text()


def test_verify_family_reports_a_wrong_closed_form(monkeypatch):
    real = H.impl_a

    def broken(p, q):
        r = real(p, q)
        return r if r != HeightSeqA((2, 2, 4, 4)) else HeightSeqA((2, 3, 4, 4))

    monkeypatch.setattr(H, "impl_a", broken)
    rep = verify_family("A", 4, ["impl"])
    impl_result = next(r for r in rep.results if r.name == "impl")
    assert not rep.ok and not impl_result.passed
    assert "1,3,3,4" in impl_result.witness or "2,2,4,4" in impl_result.witness


def test_verify_family_reports_a_wrong_regularity_test(monkeypatch):
    monkeypatch.setattr(H, "is_regular_b", lambda p: p.k == p.n)
    rep = verify_family("B", 3, ["regular"])
    assert not rep.ok
    res = next(r for r in rep.results if r.name == "regular")
    assert res.witness


def test_skipped_checks_are_labelled():
    rep = verify_family("mono", (2, 3), ["psi", "interval"])
    assert all(r.passed and r.note.startswith("skipped") for r in rep.results)


def test_checks_selection():
    assert normalize_checks(None) == list(ALL_CHECKS)
    assert normalize_checks(["psi"]) == ["psi"]
    assert normalize_checks(["impl"]) == ["order", "glb_lub", "impl"]
    with pytest.raises(ValueError):
        normalize_checks(["nope"])


def test_report_rendering():
    rep = verify_family("B", 2, ["counts", "impl"])
    text = rep.to_text()
    assert text.splitlines()[0] == "D_2^B: pass"
    doc = rep.to_dict()
    assert doc["family"] == "b" and doc["params"] == [2] and doc["ok"]
    assert [c["name"] for c in doc["checks"]] == ["counts", "order", "glb_lub", "impl"]


def test_parallel_matches_serial():
    sizes = [(n,) for n in range(1, 5)]
    serial = verify_range("B", sizes, ["impl", "regular"])
    parallel = verify_range("B", sizes, ["impl", "regular"], parallel=True)
    assert [r.to_dict() for r in serial] == [r.to_dict() for r in parallel]


def test_tops_of_type_a_and_b_differ():
    assert top("A", 3) == HeightSeqA((3, 3, 3))
    assert top("B", 3) == HeightSeqB(3, (6,))
