import pytest
from hypothesis import given, strategies as st

from freecoh.words import Alphabet, AlphabetError, concat, longest_common_suffix, strip_suffix

words = st.text(alphabet="ab", max_size=8)


def test_concat_examples():
    assert concat("ab", "") == "ab"
    assert concat("", "") == ""
    assert concat("a", "bb") == "abb"


def test_concat_alphabet_mismatch():
    with pytest.raises(AlphabetError):
        concat("a", "c", Alphabet("ab"))


def test_strip_suffix_examples():
    assert strip_suffix("abb", "b") == "ab"
    assert strip_suffix("abb", "") == "abb"
    assert strip_suffix("abb", "ab") is None


def test_longest_common_suffix_examples():
    assert longest_common_suffix(["bb", "b"]) == "b"
    assert longest_common_suffix(["ab", "ba"]) == ""
    assert longest_common_suffix(["abb", "bb", "b"]) == "b"
    with pytest.raises(ValueError):
        longest_common_suffix([])


@pytest.mark.parametrize("symbols", [[], ["a", "a"], ["ab"]])
def test_bad_alphabets(symbols):
    with pytest.raises(AlphabetError):
        Alphabet(symbols)


def test_words_shortlex():
    assert list(Alphabet("ab").words(2)) == ["", "a", "b", "aa", "ab", "ba", "bb"]
    assert Alphabet("ab").count_words(2) == 7


@given(words, words)
def test_strip_then_concat(z, x):
    y = z + x
    assert strip_suffix(y, x) + x == y


@given(st.lists(words, min_size=1, max_size=5))
def test_lcs_is_longest(ws):
    s = longest_common_suffix(ws)
    assert all(w.endswith(s) for w in ws)
    n = len(s)
    if all(len(w) > n for w in ws):
        assert len({w[-n - 1] for w in ws}) > 1


@given(st.lists(st.text(alphabet="ab", min_size=1, max_size=6), min_size=1, max_size=5))
def test_lcs_empty_iff_last_letters_differ(ws):
    assert (longest_common_suffix(ws) == "") == (len({w[-1] for w in ws}) > 1)
