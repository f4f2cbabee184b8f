import itertools
import json
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

import naive_skew_oracle as oracle
from hbx.errors import OrderTooLarge
from hbx.skew import GroupTable, SkewBraceTable, check_skew_brace, cyclic, enumerate_groups, enumerate_skew_braces

FIXTURE = json.loads((Path(__file__).parent / "fixtures" / "skew_counts.json").read_text())
GROUPS6 = oracle.labeled_groups(6)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_labeled_counts_match_fixture(n):
    assert len(enumerate_groups(n)) == FIXTURE[str(n)]["groups"]
    assert enumerate_skew_braces(n).count == FIXTURE[str(n)]["skew_braces"]


def _iso_classes(census):
    n = census.order
    seen, classes = set(), 0
    for t in census.braces:
        if t.key() in seen:
            continue
        classes += 1
        for rest in itertools.permutations(range(1, n)):
            seen.add(t.relabel((0,) + rest).key())
    return classes


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 1), (3, 1), (4, 4), (5, 1), (6, 6)])
def test_iso_counts(n, expected):
    labeled = enumerate_skew_braces(n)
    reps = enumerate_skew_braces(n, up_to_iso=True)
    assert reps.count == expected == _iso_classes(labeled)
    assert reps.count <= labeled.count
    # representatives are pairwise non-isomorphic: reducing again changes nothing
    again = [t for t in reps.braces]
    assert _iso_classes(type(reps)(n, True, again)) == reps.count


def test_small_orders_are_forced():
    assert enumerate_skew_braces(1).count == 1
    assert enumerate_skew_braces(2).count == 1


def test_trivial_brace_passes():
    for g in enumerate_groups(4):
        assert check_skew_brace(SkewBraceTable(g, g)).passed


def test_enumeration_is_closed_under_the_checker():
    census = enumerate_skew_braces(4)
    found = {t.key() for t in census.braces}
    groups = enumerate_groups(4)
    for d in groups:
        for o in groups:
            t = SkewBraceTable(d, o)
            assert check_skew_brace(t).passed == (t.key() in found)


@settings(max_examples=60)
@given(st.sampled_from(GROUPS6), st.sampled_from(GROUPS6))
def test_order6_pairs_agree_with_naive_oracle(d, o):
    t = SkewBraceTable(GroupTable.from_rows(d), GroupTable.from_rows(o))
    assert check_skew_brace(t).passed == oracle.is_skew_brace(d, o, 6)


def test_compatibility_witness():
    # two cyclic groups of order 4 labeled differently: both groups, not a brace
    d = GroupTable.from_rows([[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 1, 0], [3, 2, 0, 1]])
    o = cyclic(4)
    rep = check_skew_brace(SkewBraceTable(d, o))
    assert rep.failed_laws == ["compatibility"]
    a, b, c = rep.first("compatibility").witness
    dd, oo = d.op, o.op
    assert oo[a][dd[b][c]] != dd[dd[oo[a][b]][d.inv(a)]][oo[a][c]]
    assert not oracle.is_skew_brace(dd, oo, 4)


def test_relabeling_preserves_validity():
    for t in enumerate_skew_braces(6, up_to_iso=True).braces:
        assert check_skew_brace(t.relabel((0, 2, 1, 4, 5, 3))).passed


def test_order_bounds():
    with pytest.raises(OrderTooLarge):
        enumerate_skew_braces(9)
    with pytest.raises(OrderTooLarge):
        enumerate_skew_braces(0)


def test_parallel_enumeration_is_identical():
    a = enumerate_skew_braces(6, workers=1)
    b = enumerate_skew_braces(6, workers=2)
    assert [t.key() for t in a.braces] == [t.key() for t in b.braces]
