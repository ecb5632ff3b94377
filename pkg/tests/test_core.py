import pytest
from hypothesis import given

from finitop import FinSpace, canonical_form, e_space, is_homeomorphic, relabel, sierpinski, v_space
from finitop.construct import divisor_space
from finitop.core import t0_classes
from finitop.errors import PointOutOfRange, TransitivityViolation

from conftest import spaces, spaces_with_subset


def test_sierpinski_from_open_sets():
    X = FinSpace.from_open_sets(2, [{0}])
    assert X == sierpinski()
    assert X.leq(0, 1) and not X.leq(1, 0)
    assert X.open_sets() == [frozenset(), frozenset({0}), frozenset({0, 1})]


def test_empty_subbase_is_indiscrete():
    assert FinSpace.from_open_sets(3, []) == FinSpace.indiscrete(3)


def test_divisor_space_order():
    X = divisor_space(9)
    # index i stands for the integer i + 2; 2 <= 4 because 4 lies in cl(2)
    assert X.leq(0, 2)
    assert not X.leq(2, 0)
    # cl(m) is the multiples of m: cl(4) = {4, 8}, cl(2) = {2, 4, 6, 8}
    assert X.closure({2}) == {2, 6}
    assert X.closure({0}) == {0, 2, 4, 6}
    assert not X.closure({2}) & X.closure({7})


def test_closure_interior_min_open():
    X = sierpinski()
    assert X.closure({0}) == {0, 1}
    assert X.closure({1}) == {1}
    assert X.interior({1}) == set()
    assert X.interior({0}) == {0}
    assert X.min_open(1) == {0, 1}
    assert X.min_open(0) == {0}
    assert X.point_closure(0) == {0, 1}


def test_indistinguishable_pairs():
    assert e_space().indistinguishable_pairs() == [(1, 2)]
    assert sierpinski().indistinguishable_pairs() == []


def test_rejects_non_transitive_relation():
    with pytest.raises(TransitivityViolation):
        FinSpace.from_pairs(3, [(0, 1), (1, 2)])


def test_rejects_out_of_range_point():
    with pytest.raises(PointOutOfRange):
        sierpinski().closure({5})


def test_t0_classes_of_e_space():
    assert sorted(sorted(c) for c in t0_classes(e_space())) == [[0], [1, 2]]


def test_dict_round_trip():
    X = v_space()
    assert FinSpace.from_dict(X.to_dict()) == X


def test_dot_has_unique_nodes():
    dot = divisor_space(12).to_dot()
    nodes = [ln.strip() for ln in dot.splitlines() if ln.strip().endswith(";") and "->" not in ln and "[" in ln]
    assert len(nodes) == len(set(nodes))


@given(spaces_with_subset())
def test_closure_is_smallest_closed_superset(case):
    X, S = case
    C = X.closure(S)
    assert S <= C and X.is_closed(C)
    assert all(C <= F for F in X.closed_sets() if S <= F)


@given(spaces_with_subset())
def test_interior_dual_to_closure(case):
    X, S = case
    comp = frozenset(range(X.n)) - S
    assert X.interior(S) == frozenset(range(X.n)) - X.closure(comp)


@given(spaces())
def test_opens_form_topology(X):
    opens = set(X.open_sets())
    assert frozenset() in opens and frozenset(range(X.n)) in opens
    for a in opens:
        for b in opens:
            assert a | b in opens and a & b in opens


@given(spaces())
def test_min_open_is_least_neighbourhood(X):
    for x in range(X.n):
        U = X.min_open(x)
        assert X.is_open(U)
        assert all(U <= V for V in X.open_sets() if x in V)


@given(spaces())
def test_open_sets_recover_order(X):
    assert FinSpace.from_open_sets(X.n, X.open_sets()) == X


@given(spaces())
def test_canonical_form_invariant_under_relabeling(X):
    perm = list(reversed(range(X.n)))
    Y = relabel(X, perm)
    assert canonical_form(X) == canonical_form(Y)
    assert is_homeomorphic(X, Y)


@given(spaces())
def test_pickle_round_trip(X):
    import pickle
    Y = pickle.loads(pickle.dumps(X))
    assert Y == X and Y.down == X.down
