from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import paths_a, paths_b
from dyck_heyting.lattice import enumerate_family
from dyck_heyting.paths import (
    DomainError,
    DyckWord,
    HeightSeqA,
    HeightSeqB,
    MonotonePath,
    ValidationError,
    a_as_b,
    complement_reverse,
    embed_b_to_a,
    embed_b_to_a_word,
    format_seq,
    heights_to_word_a,
    heights_to_word_b,
    mono_word,
    parse_seq,
    psi,
    psi_word,
    restrict_a_to_b,
    word_to_heights_a,
    word_to_heights_b,
)

LONG_WORD = "uuuruuruurrruruururrrr"
LONG_HEIGHTS = (3, 5, 7, 7, 7, 8, 10, 11, 11, 11, 11)


# --- words -----------------------------------------------------------------


def test_word_is_lowercased():
    assert DyckWord("UURR").steps == "uurr"


@pytest.mark.parametrize(
    "steps, family, index",
    [
        ("uxrr", "A", 2),
        ("urru", "A", 3),
        ("ruur", "B", 1),
        ("uur", "A", None),
        ("", "A", None),
        ("uuur", "A", None),
    ],
)
def test_invalid_words(steps, family, index):
    with pytest.raises(ValidationError) as exc:
        DyckWord(steps, family)
    assert exc.value.index == index


def test_type_b_word_may_end_above_diagonal():
    assert DyckWord("uuur", "B").n == 2


@pytest.mark.parametrize(
    "word, heights",
    [(LONG_WORD, LONG_HEIGHTS), ("urur", (1, 2)), ("uuurrr", (3, 3, 3))],
)
def test_word_to_heights_a(word, heights):
    assert word_to_heights_a(word).h == heights


@pytest.mark.parametrize(
    "heights, word",
    [(LONG_HEIGHTS, LONG_WORD), ((1, 2), "urur"), ((2, 2, 4, 4), "uurruurr")],
)
def test_heights_to_word_a(heights, word):
    assert heights_to_word_a(HeightSeqA(heights)).steps == word


def test_word_to_heights_b_examples():
    assert word_to_heights_b("uuur") == HeightSeqB(2, (3,))
    assert word_to_heights_b("uurr") == HeightSeqB(2, (2, 2))
    p = word_to_heights_b("uuuruuruurruuuruuuurru")
    assert (p.n, p.h) == (11, (3, 5, 7, 7, 10, 14, 14, 15))


def test_long_b_word_last_entry_is_admissible():
    p = word_to_heights_b("uuuruuruurruuuruuuurru")
    assert p.k == 8
    assert p.h[-1] in (2 * 11 - 8, 2 * 11 - 8 + 1)
    # the seven-entry sequence is a valid path, but a different one
    other = HeightSeqB(11, (3, 5, 7, 7, 10, 14, 15))
    assert heights_to_word_b(other).steps != "uuuruuruurruuuruuuurru"


def test_heights_to_word_b_examples():
    assert heights_to_word_b(HeightSeqB(2, (3,))).steps == "uuur"
    assert heights_to_word_b(HeightSeqB(4, (1, 2, 3, 4))).steps == "urururur"
    assert heights_to_word_b(HeightSeqB(3, (6,))).steps == "uuuuuu"


def test_b_word_bottom_is_staircase():
    for n in range(1, 7):
        assert heights_to_word_b(HeightSeqB(n, tuple(range(1, n + 1)))).steps == "ur" * n


# --- height sequence validation --------------------------------------------


@pytest.mark.parametrize(
    "h, index",
    [((2, 1, 3), 2), ((1, 1, 3), 2), ((1, 2, 4), 3), ((0, 2, 3), 1)],
)
def test_invalid_a_sequences(h, index):
    with pytest.raises(ValidationError) as exc:
        HeightSeqA(h)
    assert exc.value.index == index


@pytest.mark.parametrize(
    "n, h, index",
    [(3, (1, 2, 5), 3), (3, (2, 1, 4), 2), (3, (5, 5), 1), (2, (1, 2, 3), None), (3, (), None)],
)
def test_invalid_b_sequences(n, h, index):
    with pytest.raises(ValidationError) as exc:
        HeightSeqB(n, h)
    assert exc.value.index == index


def test_invalid_mono_sequences():
    with pytest.raises(ValidationError) as exc:
        MonotonePath(3, (0, 2, 1))
    assert exc.value.index == 3
    with pytest.raises(ValidationError):
        MonotonePath(2, (0, 3))
    with pytest.raises(ValidationError):
        MonotonePath(2, (-1, 0))


def test_non_integer_entries_rejected():
    with pytest.raises(ValidationError):
        HeightSeqA((1, 2.0))
    with pytest.raises(ValidationError):
        HeightSeqA((True, 2))


def _valid_b(n, h):
    try:
        HeightSeqB(n, h)
    except ValidationError:
        return False
    return True


def test_b_sequence_carries_n():
    assert _valid_b(2, (3,)) and not _valid_b(1, (3,)) and not _valid_b(3, (3,))
    assert HeightSeqB(3, (5,)).n == 3


def test_seq_text_format():
    assert parse_seq("3,5,7") == (3, 5, 7)
    assert format_seq((3, 5, 7)) == "3,5,7"
    assert str(HeightSeqB(11, (3, 5, 7, 7, 10, 14, 14, 15))) == "3,5,7,7,10,14,14,15"
    with pytest.raises(ValidationError):
        parse_seq("3,x")
    with pytest.raises(ValidationError):
        parse_seq("")


def test_mono_word():
    assert mono_word(MonotonePath(3, (0, 2, 2))) == "ruurru"


# --- round trips -----------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 9))
def test_round_trip_a_exhaustive(n):
    for p in enumerate_family("A", n):
        w = heights_to_word_a(p)
        assert word_to_heights_a(w) == p
        assert heights_to_word_a(word_to_heights_a(w)) == w


@pytest.mark.parametrize("n", range(1, 7))
def test_round_trip_b_exhaustive(n):
    for p in enumerate_family("B", n):
        w = heights_to_word_b(p)
        assert len(w) == 2 * n
        assert word_to_heights_b(w) == p
        assert w.steps.endswith("u") == p.ends_with_up


@given(paths_a())
def test_round_trip_a_random(p):
    assert word_to_heights_a(heights_to_word_a(p)) == p


@given(paths_b())
def test_round_trip_b_random(p):
    assert word_to_heights_b(heights_to_word_b(p)) == p


@given(st.integers(1, 12).flatmap(lambda n: st.lists(st.booleans(), min_size=2 * n, max_size=2 * n)))
def test_b_length_from_word(bits):
    # clamp a random u/r string into a valid type B word
    steps, ups = [], 0
    for pos, up in enumerate(bits, 1):
        if not up and 2 * ups >= pos:
            steps.append("r")
        else:
            steps.append("u")
            ups += 1
    w = "".join(steps)
    p = word_to_heights_b(w)
    assert p.k == w.count("r") + (w[-1] == "u")


# --- psi -------------------------------------------------------------------


def test_psi_examples():
    assert psi(HeightSeqA(LONG_HEIGHTS)).h == (4, 5, 5, 6, 9, 9, 10, 10, 11, 11, 11)
    assert psi(HeightSeqA((1, 2))).h == (1, 2)
    assert psi(HeightSeqA((2, 2))).h == (2, 2)


def test_complement_reverse():
    assert complement_reverse("uurr") == "uurr"
    assert complement_reverse("uuur") == "urrr"


@pytest.mark.parametrize("n", range(1, 9))
def test_psi_involution_and_word_form_exhaustive(n):
    for p in enumerate_family("A", n):
        q = psi(p)
        assert psi(q) == p
        assert psi_word(p) == q


@given(paths_a(max_n=30))
def test_psi_involution_random(p):
    assert psi(psi(p)) == p
    assert psi(p) == psi_word(p)


# --- embedding -------------------------------------------------------------


def test_embed_examples():
    assert embed_b_to_a(HeightSeqB(2, (3,))).h == (3, 4, 4, 4)
    assert embed_b_to_a(HeightSeqB(4, (1, 2, 3, 4))).h == tuple(range(1, 9))
    assert embed_b_to_a(HeightSeqB(3, (6,))).h == (6,) * 6


def test_restrict_examples():
    assert restrict_a_to_b(HeightSeqA((3, 4, 4, 4))) == HeightSeqB(2, (3,))
    assert restrict_a_to_b(HeightSeqA(tuple(range(1, 7)))) == HeightSeqB(3, (1, 2, 3))
    assert restrict_a_to_b(HeightSeqA((6,) * 6)) == HeightSeqB(3, (6,))


def test_restrict_rejects_asymmetric_and_odd():
    with pytest.raises(DomainError):
        restrict_a_to_b(HeightSeqA((2, 2, 3, 4)))
    with pytest.raises(DomainError):
        restrict_a_to_b(HeightSeqA((1, 2, 3)))


@pytest.mark.parametrize("n", range(1, 7))
def test_embed_restrict_exhaustive(n):
    for p in enumerate_family("B", n):
        q = embed_b_to_a(p)
        assert q.n == 2 * n
        assert psi(q) == q
        assert embed_b_to_a_word(p) == q
        assert restrict_a_to_b(q) == p


@pytest.mark.parametrize("n", range(1, 6))
def test_fixed_set_is_image_of_embedding(n):
    fixed = [q for q in enumerate_family("A", 2 * n) if psi(q) == q]
    assert len(fixed) == comb(2 * n, n)
    for q in fixed:
        assert embed_b_to_a(restrict_a_to_b(q)) == q


@given(paths_b(max_n=16))
def test_embed_random(p):
    q = embed_b_to_a(p)
    assert psi(q) == q
    assert q == embed_b_to_a_word(p)
    assert restrict_a_to_b(q) == p


def test_a_as_b():
    assert a_as_b(HeightSeqA((2, 2, 3))) == HeightSeqB(3, (2, 2, 3))
