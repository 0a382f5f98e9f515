import itertools

import pytest

from freecoh.closure import member
from freecoh.coherence import (
    BudgetExceeded,
    CoherenceBounds,
    annihilator_generators,
    compute_bounds,
    generated_member,
    intersection_generators,
    related_pairs,
    render_text,
    witness_report,
)
from freecoh.presentation import Presentation, bundled
from freecoh.sequences import reachable_words

from .conftest import sym


def oracle_related_pairs(P, a, limit, cap):
    """Non-reflexive unordered pairs of r(a rho) found by breadth-first search."""
    words = list(P.alphabet.words(limit))
    out = set()
    for u in words:
        reach = reachable_words(P, a + u, cap)
        for v in words:
            if u != v and len(u) + len(v) <= limit and a + v in reach:
                out.add(tuple(sorted((u, v), key=lambda w: (len(w), w))))
    return out


@pytest.mark.parametrize(
    "pairs, a, expected",
    [
        ((), "", CoherenceBounds(0, 1, 2, 2, 6)),
        ((("a", "b"),), "", CoherenceBounds(1, 2, 6, 12, 36)),
        ((("ab", "ba"),), "b", CoherenceBounds(2, 3, 6, 18, 54)),
    ],
)
def test_compute_bounds(pairs, a, expected):
    assert compute_bounds(sym(*pairs), a) == expected


def test_annihilator_trivial():
    for a in ("", "a", "ab"):
        g = annihilator_generators(sym(), a)
        assert g.pairs == () and g.complete


def test_annihilator_commute_b(commute):
    assert oracle_related_pairs(commute, "b", 5, 9) == set()
    g = annihilator_generators(commute, "b", "capped", 5)
    assert g.pairs == ()
    assert not g.complete


def test_annihilator_swap(swap):
    g = annihilator_generators(swap, "", "reduced", cap=6)
    assert ("a", "b") in g.pairs
    assert not g.complete and g.limit == 6
    for u, v in itertools.product(swap.alphabet.words(6), repeat=2):
        if len(u) + len(v) <= 6:
            assert generated_member(swap.alphabet, g.pairs, u, v) == member(swap, u, v)


def test_capped_matches_oracle():
    for P in bundled().values():
        for a in ("", "a", "b"):
            got = set(annihilator_generators(P, a, "capped", 5).pairs)
            assert got == oracle_related_pairs(P, a, 5, 9)


def test_capped_needs_cap(swap):
    with pytest.raises(ValueError):
        annihilator_generators(swap, "", "capped")
    with pytest.raises(ValueError):
        annihilator_generators(swap, "", "bogus", 3)


def test_budget(swap):
    with pytest.raises(BudgetExceeded) as info:
        annihilator_generators(swap, "", "paper")
    assert info.value.required == 2**37 - 1
    with pytest.raises(BudgetExceeded):
        annihilator_generators(swap, "", "reduced", budget=1000)


def test_paper_mode_unary():
    P = Presentation("a", [("a", "aaa")])
    bounds = compute_bounds(P, "")
    assert bounds == CoherenceBounds(3, 4, 6, 24, 72)
    paper = annihilator_generators(P, "", "paper")
    reduced = annihilator_generators(P, "", "reduced")
    assert paper.complete and reduced.complete
    assert all(len(u) + len(v) <= 72 for u, v in paper.pairs)
    assert set(reduced.pairs) <= set(paper.pairs)
    assert reduced.pairs == (("a", "aaa"),)
    for u, v in itertools.combinations(P.alphabet.words(20), 2):
        assert generated_member(P.alphabet, reduced.pairs, u, v) == member(P, u, v)
        assert generated_member(P.alphabet, paper.pairs, u, v) == member(P, u, v)


def test_paper_mode_unary_with_prefix():
    P = Presentation("a", [("aa", "aaaaa")])
    paper = annihilator_generators(P, "a", "paper")
    reduced = annihilator_generators(P, "a", "reduced")
    assert set(reduced.pairs) <= set(paper.pairs)
    # a.a^k rho a.a^(k+3) once k >= 1
    assert reduced.pairs == (("a", "aaaa"),)
    for u, v in itertools.combinations(P.alphabet.words(15), 2):
        assert generated_member(P.alphabet, reduced.pairs, u, v) == member(P, "a" + u, "a" + v)


def test_related_pairs_order(commute_bab):
    pairs = related_pairs(commute_bab, "", 6)
    keys = [(len(u) + len(v), u, v) for u, v in pairs]
    assert keys == sorted(keys)


def test_generated_member_examples():
    ab = Presentation("ab", ()).alphabet
    assert generated_member(ab, [], "ab", "ab")
    assert not generated_member(ab, [], "ab", "ba")
    assert generated_member(ab, [("a", "b")], "ab", "bb")
    assert not generated_member(ab, [("a", "b")], "ab", "ba")


def test_intersection_examples(commute):
    empty = intersection_generators(sym(), "a", "b")
    assert empty.reps == () and empty.empty
    got = intersection_generators(commute, "a", "b")
    assert got.reps == ("ab",) and not got.empty
    assert got.candidates == ("ab", "ba")
    for P in bundled().values():
        assert intersection_generators(P, "a", "a").reps == ("a",)


def test_intersection_reps_inequivalent():
    for P in bundled().values():
        for a, b in itertools.product(["", "a", "b", "ab", "ba"], repeat=2):
            reps = intersection_generators(P, a, b).reps
            for r, s in itertools.combinations(reps, 2):
                assert not member(P, r, s)


def test_report_trivial():
    r = witness_report(sym(), "a", "b", 4)
    assert r["annihilator"]["pairs"] == []
    assert r["intersection"]["empty"]
    assert r["certification"]["passed"]


def test_report_commute(commute):
    r = witness_report(commute, "a", "b", 5)
    assert r["intersection"]["reps"] == ["ab"]
    assert r["annihilator"]["a"] == "a"
    assert r["certification"]["passed"]
    assert r["certification"]["failures"] == []
    assert render_text(r).splitlines()[-1].split() == ["certification", "pass"]


def test_report_swap(swap):
    r = witness_report(swap, "", "", 6)
    assert r["intersection"]["reps"] == [""]
    assert r["annihilator"]["pairs"] == [["a", "b"]]
    assert r["certification"]["passed"]


def test_report_complete_when_feasible():
    P = Presentation("a", [("a", "aaa")])
    r = witness_report(P, "", "a", 8)
    assert r["annihilator"]["complete"]
    assert r["certification"]["passed"]
