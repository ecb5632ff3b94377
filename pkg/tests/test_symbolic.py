import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from finitop import is_homeomorphic
from finitop.construct import chain_lower
from finitop.errors import (CarrierMismatch, NotClosed, NotDisjoint, UnsupportedCarrier,
                            WindowTooSmall)
from finitop.symbolic import (NamedSpace as N, SymbolicSet, closure, complement, cross_validate,
                              difference, equals, intersect, is_closed, is_empty, is_open, is_subset,
                              lid, member, open_envelope, projection, sample, separation_verdict,
                              staircase, trace_space, union, window_check, window_oracle)

INF = math.inf
ALL = list(N)
FIRST = [N.LowerOmega, N.UpperOmega, N.DiscreteOmega]
SECOND = [N.LowerOmegaBar, N.UpperOmegaBar, N.OmegaBar]


def P(carrier, text):
    return SymbolicSet.parse(carrier, text)


# -- set algebra --------------------------------------------------------------

def test_staircase_membership():
    F = staircase((N.DiscreteOmega, N.OmegaBar))
    assert member(F, (3, 3)) and member(F, (0, 0))
    assert not member(F, (2, 5)) and not member(F, (4, "inf"))


def test_contradictory_bounds_are_empty():
    assert is_empty(intersect(P(N.LowerOmega, "x>=5"), P(N.LowerOmega, "x<=3")))


def test_complement_of_staircase_contains_a_lid_point():
    C = complement(staircase((N.DiscreteOmega, N.OmegaBar)))
    assert member(C, (0, INF)) and member(C, (1, 4)) and not member(C, (4, 1))


def test_carrier_mismatch():
    with pytest.raises(CarrierMismatch):
        intersect(P(N.LowerOmega, "x<=3"), P(N.UpperOmega, "x<=3"))


def test_unsupported_carrier():
    with pytest.raises(UnsupportedCarrier):
        staircase((N.OmegaBar, N.UpperOmegaBar))
    with pytest.raises(UnsupportedCarrier):
        lid((N.LowerOmega, N.UpperOmega))
    with pytest.raises((UnsupportedCarrier, ValueError)):
        SymbolicSet.universe((N.LowerOmega, N.LowerOmega, N.LowerOmega))


def test_parse_rejects_inf_on_plain_omega():
    assert is_empty(P(N.LowerOmega, "x=inf"))


# -- closure and friends ------------------------------------------------------

def test_point_closure_in_lower_omega_is_a_tail():
    assert equals(closure(P(N.LowerOmega, "x=5")), P(N.LowerOmega, "x>=5"))


def test_point_closure_in_upper_omega_is_an_initial_segment():
    assert equals(closure(P(N.UpperOmega, "x=5")), P(N.UpperOmega, "x<=5"))


def test_infinite_set_gains_infinity_in_omega_bar():
    assert equals(closure(P(N.OmegaBar, "x>=3, x!=inf")), P(N.OmegaBar, "x>=3"))
    assert equals(closure(P(N.OmegaBar, "x<=3")), P(N.OmegaBar, "x<=3"))


def test_rectangle_projections():
    R = P((N.DiscreteOmega, N.OmegaBar), "x>=2, x<=4, y>=1, y<=3")
    assert equals(projection(R, 0), P(N.DiscreteOmega, "x>=2, x<=4"))
    assert equals(projection(R, 1), P(N.OmegaBar, "x>=1, x<=3"))


def test_staircase_projection_not_closed():
    F = staircase((N.LowerOmega, N.UpperOmegaBar))
    assert is_closed(F)
    Pr = projection(F, 1)
    assert equals(Pr, P(N.UpperOmegaBar, "x!=inf"))
    assert not is_closed(Pr)


def test_staircase_with_upper_first_factor_is_not_closed():
    # cl{(p, p)} in ↑ω contains every (a, p) with a <= p, which leaves the staircase
    for second in (N.LowerOmegaBar, N.UpperOmegaBar):
        F = staircase((N.UpperOmega, second))
        assert not is_closed(F)
        assert member(closure(F), (0, 3)) and not member(F, (0, 3))
    # the projection still fails to be closed on the literal carrier
    Pr = projection(staircase((N.UpperOmega, N.LowerOmegaBar)), 1)
    assert equals(Pr, P(N.LowerOmegaBar, "x!=inf")) and not is_closed(Pr)


@pytest.mark.parametrize("first", [N.LowerOmega, N.DiscreteOmega])
def test_staircase_closed_under_upper_omega_bar(first):
    assert is_closed(staircase((first, N.UpperOmegaBar)))


def test_staircase_closed_in_lower_omega_times_omega_bar():
    assert is_closed(staircase((N.LowerOmega, N.OmegaBar)))
    assert lid((N.LowerOmega, N.OmegaBar)) == P((N.LowerOmega, N.OmegaBar), "y=inf")


def test_staircase_cell_shape():
    F = staircase((N.UpperOmega, N.LowerOmegaBar))
    assert equals(F, P((N.UpperOmega, N.LowerOmegaBar), "x!=inf, y!=inf, y<=x"))


# -- envelopes and separation -------------------------------------------------

def test_envelope_of_staircase():
    carrier = (N.LowerOmega, N.OmegaBar)
    env, flag = open_envelope(staircase(carrier))
    assert equals(env, P(carrier, "x!=inf, y!=inf")) and flag


def test_envelope_of_open_set_is_itself():
    U = P(N.LowerOmega, "x<=4")
    env, flag = open_envelope(U)
    assert equals(env, U) and flag


def test_envelope_of_point_in_lower_omega():
    env, flag = open_envelope(P(N.LowerOmega, "x=5"))
    assert equals(env, P(N.LowerOmega, "x<=5")) and flag


def test_envelope_of_infinity_in_omega_bar_is_not_open():
    env, flag = open_envelope(P(N.OmegaBar, "x=inf"))
    assert equals(env, P(N.OmegaBar, "x=inf")) and not flag


def test_staircase_and_lid_cannot_be_separated():
    carrier = (N.LowerOmega, N.OmegaBar)
    v = separation_verdict(staircase(carrier), lid(carrier))
    assert v.separable is False
    assert "adherent_point" in v.certificate


def test_disjoint_rectangles_in_discrete_square_separate():
    carrier = (N.DiscreteOmega, N.DiscreteOmega)
    v = separation_verdict(P(carrier, "x<=2, y<=2"), P(carrier, "x>=5, y>=5"))
    assert v.separable


def test_intervals_in_omega_bar_separate():
    F, H = P(N.OmegaBar, "x<=2"), P(N.OmegaBar, "x>=7")
    v = separation_verdict(F, H)
    assert v.separable
    env, flag = open_envelope(F)
    assert flag and is_empty(intersect(closure(env), H))


def test_separation_preconditions():
    with pytest.raises(NotDisjoint):
        separation_verdict(P(N.OmegaBar, "x<=2"), P(N.OmegaBar, "x<=5"))
    with pytest.raises(NotClosed):
        separation_verdict(P(N.OmegaBar, "x>=2, x!=inf"), P(N.OmegaBar, "x=0"))


# -- windows --------------------------------------------------------------------

def test_trace_of_lower_omega_is_lower_chain():
    assert is_homeomorphic(trace_space(N.LowerOmega, 3), chain_lower(4))


def test_window_oracle_of_staircase():
    view = window_oracle(staircase((N.LowerOmega, N.UpperOmegaBar)), 4)
    assert view.visible() == {(m, k) for m in range(5) for k in range(m + 1)}
    assert view.beyond and not view.at_infinity


def test_window_closure_of_point_in_upper_omega():
    S = P(N.UpperOmega, "x=5")
    view = window_oracle(S, 8)
    assert view.hull(view.points) == {(v,) for v in range(6)}
    assert not view.beyond
    assert window_check("closure", S, 8)


def test_window_too_small():
    with pytest.raises(WindowTooSmall):
        window_oracle(P(N.LowerOmega, "x<=6"), 8)


# -- random sets ----------------------------------------------------------------

_UNARY = ["{v}<={c}", "{v}>={c}", "{v}={c}", "{v}=inf", "{v}!=inf"]
_BINARY = ["y<=x+{c}", "y>=x+{c}", "y<=x", "y>=x", "x<=y+{c}"]


CARRIERS = [(s,) for s in ALL] + [(a, b) for a in ALL for b in ALL]


@st.composite
def symbolic_sets(draw, carrier=None):
    if carrier is None:
        carrier = draw(st.sampled_from(CARRIERS))
    names = "xy"[:len(carrier)]
    cells = []
    for _ in range(draw(st.integers(1, 3))):
        atoms = []
        for _ in range(draw(st.integers(0, 3))):
            c = draw(st.integers(0, 4))
            if len(carrier) == 2 and draw(st.booleans()):
                atoms.append(draw(st.sampled_from(_BINARY)).format(c=c))
            else:
                atoms.append(draw(st.sampled_from(_UNARY)).format(v=draw(st.sampled_from(names)), c=c))
        cells.append(", ".join(atoms))
    return P(carrier if len(carrier) == 2 else carrier[0], " | ".join(cells))


def _points(S, hi=7):
    axes = [list(range(hi)) + ([INF] if s.has_inf else []) for s in S.carrier]
    pts = [()]
    for ax in axes:
        pts = [p + (v,) for p in pts for v in ax]
    return pts


@st.composite
def set_pairs(draw):
    carrier = draw(st.sampled_from(CARRIERS))
    return draw(symbolic_sets(carrier)), draw(symbolic_sets(carrier))


@given(set_pairs())
@settings(max_examples=150, deadline=None)
def test_boolean_algebra_pointwise(pair):
    S, T = pair
    C = complement(S)
    I, U, D = intersect(S, T), union(S, T), difference(S, T)
    for p in _points(S):
        a, b = member(S, p), member(T, p)
        assert member(C, p) == (not a)
        assert member(I, p) == (a and b)
        assert member(U, p) == (a or b)
        assert member(D, p) == (a and not b)
    if not is_empty(S):
        assert member(S, sample(S))


@given(symbolic_sets())
@settings(max_examples=150, deadline=None)
def test_closure_laws(S):
    C = closure(S)
    assert is_subset(S, C)
    assert equals(closure(C), C)
    assert is_closed(C)
    assert is_open(S) == is_closed(complement(S))
    env, _ = open_envelope(S)
    assert is_subset(S, env)


@given(symbolic_sets())
@settings(max_examples=40, deadline=None)
def test_window_oracle_soundness(S):
    B = S.max_constant()
    for W in (B + 3, 4 * (B + 3), 16 * (B + 3)):
        assert all(cross_validate(S, (W,)).values()), (str(S), W)


def test_window_sweep_on_fixed_sample():
    rng = random.Random(3)
    carriers = [(a, b) for a in ALL for b in ALL]
    for _ in range(30):
        carrier = rng.choice(carriers)
        c = rng.randint(0, 3)
        text = rng.choice(["y<=x", "y>=x+{c}, x<={c}", "x>={c} | y=inf", "y!=inf, y<=x+{c}", "x=inf | y>={c}"])
        S = P(carrier, text.format(c=c))
        B = S.max_constant()
        for W in (B + 3, 4 * (B + 3)):
            for op in ("closure", "is_closed", "is_open", "envelope", "projection0", "projection1"):
                assert window_check(op, S, W), (carrier, text, op, W)
