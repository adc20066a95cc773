import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from dyck_heyting.lattice import leq, meet
from dyck_heyting.paths import HeightSeqA, HeightSeqB, MonotonePath

settings.register_profile("default", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=1000, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def paths_a(draw, n=None, max_n=14):
    n = draw(st.integers(1, max_n)) if n is None else n
    h, prev = [], 0
    for i in range(1, n + 1):
        prev = draw(st.integers(max(prev, i), n))
        h.append(prev)
    return HeightSeqA(tuple(h))


@st.composite
def paths_b(draw, n=None, max_n=10):
    n = draw(st.integers(1, max_n)) if n is None else n
    k = draw(st.integers(1, n))
    h, prev = [], 0
    for i in range(1, k):
        prev = draw(st.integers(max(prev, i), 2 * n - k))
        h.append(prev)
    h.append(draw(st.sampled_from((2 * n - k, 2 * n - k + 1))))
    return HeightSeqB(n, tuple(h))


@st.composite
def paths_mono(draw, n=None, m=None, max_n=8, max_m=8):
    n = draw(st.integers(1, max_n)) if n is None else n
    m = draw(st.integers(0, max_m)) if m is None else m
    h, prev = [], 0
    for _ in range(n):
        prev = draw(st.integers(prev, m))
        h.append(prev)
    return MonotonePath(m, tuple(h))


@st.composite
def same_space(draw, count=2):
    """``count`` paths drawn from one randomly chosen lattice."""
    family = draw(st.sampled_from(("A", "B", "mono")))
    if family == "A":
        n = draw(st.integers(1, 14))
        return tuple(draw(paths_a(n=n)) for _ in range(count))
    if family == "B":
        n = draw(st.integers(1, 10))
        return tuple(draw(paths_b(n=n)) for _ in range(count))
    n, m = draw(st.integers(1, 8)), draw(st.integers(0, 8))
    return tuple(draw(paths_mono(n=n, m=m)) for _ in range(count))


def brute_max(elements, pred):
    """The unique greatest element satisfying ``pred``, found by scanning everything."""
    cands = [z for z in elements if pred(z)]
    tops = [z for z in cands if all(leq(y, z) for y in cands)]
    assert len(tops) == 1
    return tops[0]


def brute_impl(elements, p, q):
    return brute_max(elements, lambda z: leq(meet(p, z), q))
