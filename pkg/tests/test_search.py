import pytest

from finitop import FinSpace, canonical_form, is_homeomorphic, v_space
from finitop.dsl import evaluate, parse
from finitop.errors import BoundExceeded, UnboundVariable
from finitop.search import (candidate_tuples, count, count_topologies_by_families, enumerate_spaces,
                            find_counterexample)


@pytest.mark.parametrize("n,labeled,iso,t0", [(1, 1, 1, 1), (2, 4, 3, 2), (3, 29, 9, 5), (4, 355, 33, 16)])
def test_counts(n, labeled, iso, t0):
    assert count(n) == labeled
    assert count(n, up_to_iso=True) == iso
    assert count(n, t0_only=True, up_to_iso=True) == t0


def test_counts_at_five_points():
    assert count(5) == 6942
    assert count(5, up_to_iso=True) == 139
    assert count(6, up_to_iso=True) == 718
    assert count(6, t0_only=True, up_to_iso=True) == 318


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_labeled_counts_match_family_oracle(n):
    assert count(n) == count_topologies_by_families(n)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_iso_reps_are_canonical_dedupe_of_labeled(n):
    classes = {canonical_form(X) for X in enumerate_spaces(n)}
    reps = list(enumerate_spaces(n, up_to_iso=True))
    assert len(reps) == len(classes) == len(set(reps))
    assert set(reps) == classes


def test_labeled_spaces_are_distinct_preorders():
    spaces = list(enumerate_spaces(4))
    assert len(set(spaces)) == len(spaces)


def test_t0_enumeration_yields_posets():
    for X in enumerate_spaces(4, t0_only=True):
        assert not X.indistinguishable_pairs()


def test_stream_is_an_iterator():
    s = enumerate_spaces(2)
    assert iter(s) is s
    assert len(list(s)) == 4
    assert list(s) == []


def test_bound_exceeded():
    with pytest.raises(BoundExceeded):
        enumerate_spaces(9)
    with pytest.raises(BoundExceeded):
        count(0)


def test_minimal_non_normal_space():
    out = find_counterexample("!normal(X)", {"X": 3})
    assert out.found and is_homeomorphic(out.witness["X"], v_space())
    out = find_counterexample("!normal(X)", {"X": 2})
    assert not out.found and out.verdict == "exhausted_none"


def test_minimal_non_vacuously_normal_space():
    out = find_counterexample("!vacnormal(X)", {"X": 2})
    assert out.witness["X"] == FinSpace.discrete(2)


def test_unbound_variable():
    with pytest.raises(UnboundVariable):
        find_counterexample("normal(prod(X, Y))", {"X": 2})


def test_search_order_is_size_first():
    combos = candidate_tuples(["X", "Y"], {"X": 2, "Y": 2})
    sizes = [sum(S.n for S in c) for c in combos]
    assert sizes == sorted(sizes)


def test_witness_satisfies_query_and_search_is_deterministic():
    q = "t0(X) & !irreducible(X) & trivcompact(prod(X, Y))"
    a = find_counterexample(q, {"X": 3, "Y": 2})
    b = find_counterexample(q, {"X": 3, "Y": 2})
    assert a.found and evaluate(parse(q), a.witness)
    assert (a.verdict, a.witness, a.visited) == (b.verdict, b.witness, b.visited)


def test_parallel_matches_serial():
    q = "!normal(X) & t0(X) & irreducible(star(X))"
    serial = find_counterexample(q, {"X": 4})
    parallel = find_counterexample(q, {"X": 4}, workers=3)
    assert serial.to_dict()["witness"] == parallel.to_dict()["witness"]
    assert serial.verdict == parallel.verdict
