"""Constraint-defined subsets of the countable test spaces and their products.

Six named topologies live on the naturals (three of them with an extra
point ``inf``):

=================  =========================================  ==================
space              basic neighbourhoods of a natural ``p``     of ``inf``
=================  =========================================  ==================
DiscreteOmega      ``{p}``                                     -
LowerOmega         ``[0, p]``                                  -
UpperOmega         ``[p, inf)``                                -
OmegaBar           ``{p}``                                     ``[m, inf]``, all m
LowerOmegaBar      ``[0, p]``                                  whole space
UpperOmegaBar      ``[p, inf]``                                ``[m, inf]``, all m
=================  =========================================  ==================

A set is a finite union of *cells*.  A cell fixes for every coordinate
whether it is finite or ``inf`` and constrains the finite coordinates by a
difference-bound matrix with integer constants.  Closure, open envelope and
projection reduce to satisfiability and variable elimination on a slightly
larger matrix, which keeps every answer exact.

The window helpers translate a set to the finite engine on ``{0..W}`` (plus
``inf``) so that each symbolic answer can be compared with a brute-force
computation on a finite model.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as iproduct

from . import core
from .core import FinSpace
from .dbm import DBM, INF
from .errors import (CarrierMismatch, NotClosed, NotDisjoint, UndecidedSeparation,
                     UnsupportedCarrier, WindowTooSmall)

FIN, INFK = "fin", "inf"


class NamedSpace(enum.Enum):
    DiscreteOmega = "discrete_omega"
    LowerOmega = "lower_omega"
    UpperOmega = "upper_omega"
    OmegaBar = "omega_bar"
    LowerOmegaBar = "lower_omega_bar"
    UpperOmegaBar = "upper_omega_bar"

    @property
    def has_inf(self):
        return self.value.endswith("_bar")

    @property
    def kinds(self):
        return (FIN, INFK) if self.has_inf else (FIN,)

    @property
    def symbol(self):
        return _SYMBOLS[self]

    @classmethod
    def parse(cls, text):
        t = text.strip()
        for s in cls:
            if t in (s.value, s.name, s.symbol):
                return s
        raise ValueError(f"unknown named space {text!r}")


_SYMBOLS = {
    NamedSpace.DiscreteOmega: "ω", NamedSpace.LowerOmega: "↓ω", NamedSpace.UpperOmega: "↑ω",
    NamedSpace.OmegaBar: "ω̄", NamedSpace.LowerOmegaBar: "↓ω̄", NamedSpace.UpperOmegaBar: "↑ω̄",
}

# (space, kind of the centre) -> (inf belongs to every basic nbhd, rule for finite points)
# rules: eq t = c, le t <= c, ge t >= c, tail t >= m for a free bound m, all: no constraint
_RULES = {
    (NamedSpace.DiscreteOmega, FIN): (False, "eq"),
    (NamedSpace.LowerOmega, FIN): (False, "le"),
    (NamedSpace.UpperOmega, FIN): (False, "ge"),
    (NamedSpace.OmegaBar, FIN): (False, "eq"),
    (NamedSpace.OmegaBar, INFK): (True, "tail"),
    (NamedSpace.LowerOmegaBar, FIN): (False, "le"),
    (NamedSpace.LowerOmegaBar, INFK): (True, "all"),
    (NamedSpace.UpperOmegaBar, FIN): (True, "ge"),
    (NamedSpace.UpperOmegaBar, INFK): (True, "tail"),
}

FIRST_FACTORS = (NamedSpace.LowerOmega, NamedSpace.UpperOmega, NamedSpace.DiscreteOmega)
SECOND_FACTORS = (NamedSpace.LowerOmegaBar, NamedSpace.UpperOmegaBar, NamedSpace.OmegaBar)
VARS = ("x", "y")


def _carrier(carrier):
    if isinstance(carrier, NamedSpace):
        carrier = (carrier,)
    carrier = tuple(carrier)
    if not 1 <= len(carrier) <= 2 or not all(isinstance(s, NamedSpace) for s in carrier):
        raise UnsupportedCarrier("carrier must be one named space or a product of two")
    return carrier


# -- cells -------------------------------------------------------------------

@dataclass(frozen=True)
class Cell:
    kinds: tuple
    bounds: tuple  # closed DBM over zero and the finite coordinates, in order

    def fin_coords(self):
        return [i for i, k in enumerate(self.kinds) if k == FIN]

    def dbm(self):
        return DBM(len(self.bounds), [list(r) for r in self.bounds])

    def contains(self, point):
        for k, v in zip(self.kinds, point):
            if (v == INF) != (k == INFK):
                return False
        v = [0] + [p for p, k in zip(point, self.kinds) if k == FIN]
        m = self.bounds
        n = len(v)
        return all(v[i] - v[j] <= m[i][j] for i in range(n) for j in range(n))

    def sample(self):
        """The componentwise least point of the cell."""
        m = self.bounds
        out, node = [], 1
        for k in self.kinds:
            if k == INFK:
                out.append(INF)
            else:
                out.append(int(-m[0][node]))
                node += 1
        return tuple(out)

    def constraints(self):
        names = {}
        node = 1
        atoms = []
        for i, k in enumerate(self.kinds):
            if k == INFK:
                atoms.append(f"{VARS[i]}=inf")
            else:
                names[node] = VARS[i]
                atoms.append(f"{VARS[i]}!=inf")
                node += 1
        m = self.bounds
        for a, va in names.items():
            if m[a][0] != INF:
                atoms.append(f"{va}<={int(m[a][0])}")
            if m[0][a] < 0:
                atoms.append(f"{va}>={int(-m[0][a])}")
        for a, va in names.items():
            for b, vb in names.items():
                if a != b and m[a][b] != INF and (m[a][b] < m[a][0] - m[b][0] if m[b][0] != INF else True):
                    c = int(m[a][b])
                    atoms.append(f"{va}<={vb}{'+' if c >= 0 else '-'}{abs(c)}")
        return atoms

    def __str__(self):
        return ", ".join(self.constraints())


def _cell(kinds, dbm):
    if not dbm.close():
        return None
    return Cell(tuple(kinds), dbm.key())


def _full_cell(kinds):
    return _cell(kinds, DBM(1 + sum(k == FIN for k in kinds)))


def _cell_intersect(a, b):
    if a.kinds != b.kinds:
        return None
    d = DBM(len(a.bounds), [[min(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a.bounds, b.bounds)])
    return _cell(a.kinds, d)


def _normalize(cells):
    cells = {c for c in cells if c is not None}
    keep = []
    for c in sorted(cells, key=lambda c: (c.kinds, c.bounds)):
        # closed matrices are canonical, so distinct cells never include each other both ways
        if any(o != c and o.kinds == c.kinds and o.dbm().includes(c.dbm()) for o in cells):
            continue
        keep.append(c)
    return tuple(keep)


def _cell_complement(carrier, c):
    out = [_full_cell(k) for k in iproduct(*(s.kinds for s in carrier)) if k != c.kinds]
    m = c.bounds
    n = len(m)
    for i in range(n):
        for j in range(n):
            if i != j and m[i][j] != INF:
                d = DBM(n)
                d.add(j, i, -m[i][j] - 1)
                out.append(_cell(c.kinds, d))
    return out


# -- sets --------------------------------------------------------------------

@dataclass(frozen=True)
class SymbolicSet:
    carrier: tuple
    cells: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "carrier", _carrier(self.carrier))
        object.__setattr__(self, "cells", _normalize(self.cells))

    @property
    def dim(self):
        return len(self.carrier)

    @classmethod
    def empty(cls, carrier):
        return cls(carrier, ())

    @classmethod
    def universe(cls, carrier):
        carrier = _carrier(carrier)
        return cls(carrier, [_full_cell(k) for k in iproduct(*(s.kinds for s in carrier))])

    @classmethod
    def parse(cls, carrier, text):
        """Cells separated by ``|``, atoms inside a cell by ``,``.

        Atoms: ``x<=3``, ``y>=x+1``, ``x=inf``, ``y!=inf``, ``x=5``, ``y<x-2``.
        A coordinate not pinned by an atom ranges over both kinds where the
        space has ``inf``; ``inf`` satisfies every lower bound and no upper
        bound.
        """
        carrier = _carrier(carrier)
        cells = []
        for part in text.split("|"):
            atoms = [_parse_atom(a, len(carrier)) for a in part.split(",") if a.strip()]
            for kinds in iproduct(*(s.kinds for s in carrier)):
                d = DBM(1 + sum(k == FIN for k in kinds))
                node = _node_map(kinds)
                if all(_apply_atom(a, kinds, node, d) for a in atoms):
                    cells.append(_cell(kinds, d))
        return cls(carrier, cells)

    def max_constant(self):
        return max((c.dbm().max_constant() for c in self.cells), default=0)

    def __contains__(self, point):
        return member(self, point)

    def __str__(self):
        if not self.cells:
            return "∅"
        return " | ".join(f"{{{c}}}" for c in self.cells)

    def to_dict(self):
        return {"carrier": [s.value for s in self.carrier], "cells": [c.constraints() for c in self.cells]}


def _node_map(kinds):
    node, out = 1, {}
    for i, k in enumerate(kinds):
        if k == FIN:
            out[i] = node
            node += 1
    return out


_ATOM = re.compile(r"^\s*([xy])\s*(<=|>=|!=|=|<|>)\s*(?:(inf|∞)|(\d+)|([xy])\s*(?:([+-])\s*(\d+))?)\s*$")


def _parse_atom(text, dim):
    m = _ATOM.match(text)
    if not m:
        raise ValueError(f"cannot parse constraint {text!r}")
    lhs, op, inf, num, rhs, sign, off = m.groups()
    for v in (lhs, rhs):
        if v is not None and VARS.index(v) >= dim:
            raise ValueError(f"variable {v!r} not in a {dim}-dimensional carrier")
    if inf:
        return (VARS.index(lhs), op, "inf", 0)
    if num is not None:
        return (VARS.index(lhs), op, None, int(num))
    c = int(off or 0) * (-1 if sign == "-" else 1)
    if op == "!=":
        raise ValueError("'!=' between coordinates is not a difference constraint")
    return (VARS.index(lhs), op, VARS.index(rhs), c)


def _apply_atom(atom, kinds, node, d):
    """Add the atom to ``d`` for this kind pattern; False if it cannot hold."""
    a, op, rhs, c = atom
    a_inf = kinds[a] == INFK
    if rhs == "inf":
        return {"=": a_inf, "!=": not a_inf, "<=": True, ">=": a_inf, "<": not a_inf, ">": False}[op]
    if rhs is None:
        if a_inf:
            return op in (">=", ">", "!=")
        if op == "!=":
            raise ValueError("'!=' with a constant is not a difference constraint")
        na = node[a]
        if op in ("<=", "=", "<"):
            d.upper(na, c - (op == "<"))
        if op in (">=", "=", ">"):
            d.lower(na, c + (op == ">"))
        return True
    b_inf = kinds[rhs] == INFK
    if a_inf or b_inf:
        if a_inf and b_inf:
            return op in ("<=", ">=", "=")
        if a_inf:
            return op in (">=", ">")
        return op in ("<=", "<")
    na, nb = node[a], node[rhs]
    if op in ("<=", "=", "<"):
        d.add(na, nb, c - (op == "<"))
    if op in (">=", "=", ">"):
        d.add(nb, na, -c - (op == ">"))
    return True


def _same(S, T):
    if S.carrier != T.carrier:
        raise CarrierMismatch(f"{_name(S.carrier)} vs {_name(T.carrier)}")


def _name(carrier):
    return " × ".join(s.symbol for s in carrier)


def member(S, point):
    if not isinstance(point, (tuple, list)):
        point = (point,)
    point = tuple(INF if (isinstance(v, str) and v in ("inf", "∞")) else v for v in point)
    if len(point) != S.dim:
        raise ValueError(f"point {point} does not match a {S.dim}-dimensional carrier")
    for s, v in zip(S.carrier, point):
        if v == INF and not s.has_inf:
            return False
        if v != INF and (int(v) != v or v < 0):
            return False
    return any(c.contains(point) for c in S.cells)


def is_empty(S):
    return not S.cells


def intersect(S, T):
    _same(S, T)
    return SymbolicSet(S.carrier, [_cell_intersect(a, b) for a in S.cells for b in T.cells])


def union(S, T):
    _same(S, T)
    return SymbolicSet(S.carrier, S.cells + T.cells)


def complement(S):
    out = SymbolicSet.universe(S.carrier)
    for c in S.cells:
        out = intersect(out, SymbolicSet(S.carrier, _cell_complement(S.carrier, c)))
    return out


def difference(S, T):
    return intersect(S, complement(T))


def is_subset(S, T):
    return is_empty(difference(S, T))


def equals(S, T):
    return is_subset(S, T) and is_subset(T, S)


def sample(S):
    """Some member of ``S`` (the least point of its first cell), or None."""
    return S.cells[0].sample() if S.cells else None


# -- topology ----------------------------------------------------------------

def _link(d, rule, centre, target, m_node):
    """Constrain finite ``target`` to lie in the basic nbhd of ``centre``."""
    if rule == "eq":
        d.eq(target, centre)
    elif rule == "le":
        d.add(target, centre, 0)
    elif rule == "ge":
        d.add(centre, target, 0)
    elif rule == "tail":
        d.add(m_node, target, 0)


def _closure_cell(carrier, c):
    out = []
    x_nodes = _node_map(c.kinds)
    nx = len(x_nodes)
    for pk in iproduct(*(s.kinds for s in carrier)):
        p_nodes = {i: 1 + nx + j for j, i in enumerate(i for i, k in enumerate(pk) if k == FIN)}
        m_node = 1 + nx + len(p_nodes)
        d = DBM(m_node + 1)
        for i in range(1 + nx):
            for j in range(1 + nx):
                d.add(i, j, c.bounds[i][j])
        ok = True
        for i, s in enumerate(carrier):
            inf_ok, rule = _RULES[s, pk[i]]
            if c.kinds[i] == INFK:
                ok = inf_ok
            else:
                _link(d, rule, p_nodes.get(i), x_nodes[i], m_node)
            if not ok:
                break
        if not ok or not d.close():
            continue
        # the target point qualifies for every tail bound m only if m is unbounded
        if any(d.m[m_node][j] != INF for j in [0, *p_nodes.values()]):
            continue
        out.append(_cell(pk, d.project([0, *p_nodes.values()])))
    return out


def closure(S):
    cells = []
    for c in S.cells:
        cells.extend(_closure_cell(S.carrier, c))
    return SymbolicSet(S.carrier, cells)


def is_closed(S):
    return is_subset(closure(S), S)


def is_open(S):
    return is_closed(complement(S))


def interior(S):
    return complement(closure(complement(S)))


def projection(S, axis):
    """Image of ``S`` under the coordinate map onto factor ``axis``."""
    if S.dim != 2:
        raise UnsupportedCarrier("projection needs a product carrier")
    if axis not in (0, 1):
        raise ValueError("axis must be 0 or 1")
    cells = []
    for c in S.cells:
        kind = c.kinds[axis]
        if kind == INFK:
            cells.append(_full_cell((INFK,)))
        else:
            cells.append(_cell((FIN,), c.dbm().project([0, _node_map(c.kinds)[axis]])))
    return SymbolicSet((S.carrier[axis],), cells)


def _envelope_cell(carrier, c):
    out = []
    x_nodes = _node_map(c.kinds)
    nx = len(x_nodes)
    for pk in iproduct(*(s.kinds for s in carrier)):
        p_nodes = {i: 1 + nx + j for j, i in enumerate(i for i, k in enumerate(pk) if k == FIN)}
        d = DBM(1 + nx + len(p_nodes))
        for i in range(1 + nx):
            for j in range(1 + nx):
                d.add(i, j, c.bounds[i][j])
        ok = True
        for i, s in enumerate(carrier):
            inf_ok, rule = _RULES[s, c.kinds[i]]
            if pk[i] == INFK:
                ok = inf_ok
            elif rule == "tail":
                ok = False  # no natural lies in every tail
            else:
                _link(d, rule, x_nodes.get(i), p_nodes[i], None)
            if not ok:
                break
        if ok and d.close():
            out.append(_cell(pk, d.project([0, *p_nodes.values()])))
    return out


def open_envelope(S):
    """Intersection of all open supersets of ``S`` and whether it is open.

    A point ``p`` survives exactly when it lies in every neighbourhood of
    some member of ``S``; otherwise a union of basic neighbourhoods avoiding
    ``p`` is an open superset that excludes it.
    """
    cells = []
    for c in S.cells:
        cells.extend(_envelope_cell(S.carrier, c))
    env = SymbolicSet(S.carrier, cells)
    return env, is_open(env)


# -- staircases --------------------------------------------------------------

def _staircase_carrier(carrier):
    carrier = _carrier(carrier)
    if len(carrier) != 2 or carrier[0] not in FIRST_FACTORS or carrier[1] not in SECOND_FACTORS:
        raise UnsupportedCarrier(
            f"staircases live on X × Y with X in {{ω, ↓ω, ↑ω}} and Y in {{↓ω̄, ↑ω̄, ω̄}}, got {_name(carrier)}")
    return carrier


def staircase(carrier):
    """``{(m, k): k <= m}``, both coordinates finite."""
    return SymbolicSet.parse(_staircase_carrier(carrier), "x!=inf, y!=inf, y<=x")


def lid(carrier):
    """``{(m, inf)}``."""
    return SymbolicSet.parse(_staircase_carrier(carrier), "x!=inf, y=inf")


@dataclass(frozen=True)
class SeparationVerdict:
    separable: bool
    certificate: dict

    def to_dict(self):
        return {"separable": self.separable, "certificate": self.certificate}


def _point_json(p):
    return ["inf" if v == INF else int(v) for v in p]


def separation_verdict(F, H):
    """Decide whether disjoint closed sets have disjoint open neighbourhoods.

    Every open set around ``F`` contains its envelope, so a point of ``H``
    adherent to that envelope rules separation out.  When an envelope is
    itself open and its closure misses the other set, the envelope and the
    complement of its closure separate.  Anything else is reported as
    undecided rather than guessed.
    """
    _same(F, H)
    if not is_empty(intersect(F, H)):
        raise NotDisjoint(f"sets share the point {sample(intersect(F, H))}")
    for name, S in (("F", F), ("H", H)):
        if not is_closed(S):
            raise NotClosed(f"{name} is not closed")
    envs = {}
    for name, A, B, other in (("F", F, H, "H"), ("H", H, F, "F")):
        env, flag = open_envelope(A)
        meet = intersect(closure(env), B)
        envs[name] = (env, flag, meet)
        if not is_empty(meet):
            return SeparationVerdict(False, {
                "reason": f"every open set containing {other} meets the envelope of {name}",
                "envelope": env.to_dict(), "envelope_open": flag,
                "adherent_point": _point_json(sample(meet))})
    for name, other in (("F", "H"), ("H", "F")):
        env, flag, _ = envs[name]
        if flag:
            U, V = env, complement(closure(env))
            pair = (U, V) if name == "F" else (V, U)
            return SeparationVerdict(True, {
                "reason": f"envelope of {name} is open and its closure misses {other}",
                "U": pair[0].to_dict(), "V": pair[1].to_dict()})
    raise UndecidedSeparation("neither envelope criterion decides this pair")


# -- finite windows ----------------------------------------------------------
#
# The window model of a named space has the points 0..W, one extra point
# W + 1 standing for every natural beyond W, and inf where the space has it.
# The lumped point belongs to a windowed set when some member of the set has
# that coordinate beyond W (a tail flag), and the tail neighbourhoods of inf
# shrink to {W + 1, inf}.  Beyond the largest constant B of a set every cell
# is translation-invariant, so on points at most W - B - 2 (and inf) the
# model agrees with the countable space.

def window_values(named, W, lumped=True):
    vals = list(range(W + 2 if lumped else W + 1))
    if named.has_inf:
        vals.append(INF)
    return vals


def _window_down(named, centre, W, lumped):
    """Window values in the smallest neighbourhood of ``centre``."""
    inf_ok, rule = _RULES[named, INFK if centre == INF else FIN]
    out = {INF} if inf_ok and named.has_inf else set()
    top = W + 1 if lumped else W
    for t in range(top + 1):
        if (rule == "eq" and t == centre or rule == "le" and t <= centre
                or rule == "ge" and t >= centre or rule == "all"
                or rule == "tail" and lumped and t == top):
            out.add(t)
    return out


def _window_factor(named, W, lumped):
    vals = window_values(named, W, lumped)
    idx = {v: i for i, v in enumerate(vals)}
    pairs = [(idx[t], i) for i, c in enumerate(vals) for t in _window_down(named, c, W, lumped)]
    return FinSpace.from_pairs(len(vals), pairs, close=True)


def trace_space(named, W):
    """Subspace topology on ``{0..W}`` (plus ``inf``); ``inf`` of ω̄ and ↑ω̄ is isolated there."""
    return _window_factor(named, W, lumped=False)


def window_factor(named, W):
    """Window model of ``named``: the trace on ``{0..W}`` plus a lumped point ``W + 1``."""
    return _window_factor(named, W, lumped=True)


def window_space(carrier, W):
    """Product of the window factors and the coordinates of its points."""
    from .construct import product
    carrier = _carrier(carrier)
    spaces = [window_factor(s, W) for s in carrier]
    X = spaces[0]
    for Y in spaces[1:]:
        X = product(X, Y, limit=X.n * Y.n)
    return X, [tuple(c) for c in iproduct(*(window_values(s, W) for s in carrier))]


@dataclass(frozen=True)
class WindowView:
    """``S`` restricted to the window model; coordinate ``W + 1`` means "beyond W"."""

    carrier: tuple
    W: int
    points: frozenset
    beyond: bool       # S has a finite coordinate larger than W
    at_infinity: bool  # S has points with an inf coordinate

    @property
    def factors(self):
        return [window_factor(s, self.W) for s in self.carrier]

    @property
    def values(self):
        return [window_values(s, self.W) for s in self.carrier]

    def coords(self):
        return [tuple(c) for c in iproduct(*self.values)]

    def visible(self):
        """Members inside ``{0..W}`` and inf, without the lumped tail point."""
        return frozenset(p for p in self.points if all(v <= self.W or v == INF for v in p))

    def hull(self, pts, upward=True):
        """Closure (``upward``) or smallest open superset of ``pts`` in the model.

        The product order is componentwise, so the hull is taken one factor
        at a time on rows of bitmasks.
        """
        facs, vals = self.factors, self.values
        idx = [{v: i for i, v in enumerate(vs)} for vs in vals]
        step = (lambda X, m: X.up_mask(m)) if upward else (lambda X, m: X.down_mask(m))
        if len(facs) == 1:
            m = step(facs[0], core.to_mask(idx[0][p[0]] for p in pts))
            return frozenset((vals[0][i],) for i in core.bits(m))
        X, Y = facs
        rows = [0] * X.n
        for a, b in pts:
            rows[idx[0][a]] |= 1 << idx[1][b]
        rows = [step(Y, r) if r else 0 for r in rows]
        out = set()
        for a2 in range(X.n):
            acc = 0
            for a in core.bits(X.down[a2] if upward else X.up[a2]):
                acc |= rows[a]
            out.update((vals[0][a2], vals[1][b]) for b in core.bits(acc))
        return frozenset(out)

    def to_dict(self):
        return {"window": self.W, "points": sorted(_point_json(p) for p in self.visible()),
                "beyond_window": self.beyond, "at_infinity": self.at_infinity}


def _lumped_member(S, point, W):
    atoms = []
    for v, c in zip(VARS, point):
        if c == INF:
            atoms.append(f"{v}=inf")
        elif c > W:
            atoms.append(f"{v}>={W + 1}, {v}!=inf")
        else:
            atoms.append(f"{v}={c}")
    return not is_empty(intersect(S, SymbolicSet.parse(S.carrier, ", ".join(atoms))))


@lru_cache(maxsize=256)
def _window_points(S, W):
    pts = set()
    for c in iproduct(*(window_values(s, W) for s in S.carrier)):
        if any(v != INF and v > W for v in c):
            if _lumped_member(S, c, W):
                pts.add(c)
        elif member(S, c):
            pts.add(c)
    return frozenset(pts)


def window_oracle(S, W):
    B = S.max_constant()
    if W <= B + 2:
        raise WindowTooSmall(f"window {W} must exceed B + 2 = {B + 2}")
    pts = _window_points(S, W)
    beyond = any(v != INF and v > W for p in pts for v in p)
    at_inf = any(k == INFK for c in S.cells for k in c.kinds)
    return WindowView(S.carrier, W, pts, beyond, at_inf)


def core_region(view, B):
    """Window points far enough from the edge for windowed answers to be exact."""
    lim = view.W - B - 2
    return frozenset(c for c in view.coords() if all(v == INF or v <= lim for v in c))


def _windowed(S, region):
    return frozenset(c for c in region if member(S, c))


def window_check(op, S, W):
    """Compare one symbolic operation on ``S`` with the finite engine on a window.

    ``op`` is closure, is_closed, is_open, envelope, projection0 or
    projection1.  Agreement is required on the core region.
    """
    view = window_oracle(S, W)
    region = core_region(view, S.max_constant())
    pts = view.points
    if op == "closure":
        return _windowed(closure(S), region) == view.hull(pts) & region
    if op == "is_closed":
        return _windowed(difference(closure(S), S), region) == (view.hull(pts) - pts) & region
    if op == "is_open":
        # negated bounds can grow the largest constant by one
        C = complement(S)
        region = core_region(view, max(S.max_constant(), C.max_constant()))
        cpts = _window_points(C, W)
        return _windowed(difference(closure(C), C), region) == (view.hull(cpts) - cpts) & region
    if op == "envelope":
        env, _ = open_envelope(S)
        return _windowed(env, region) == view.hull(pts, upward=False) & region
    if op in ("projection0", "projection1"):
        axis = int(op[-1])
        P = projection(S, axis)
        reg = {c[axis] for c in region}
        return {v for v in reg if member(P, (v,))} == {c[axis] for c in pts} & reg
    raise ValueError(f"unknown window check {op!r}")


WINDOW_OPS = ("closure", "is_closed", "is_open", "envelope")


def cross_validate(S, windows=(8, 32, 128), ops=None):
    """``{W: every check agrees}`` for each window large enough for ``S``."""
    ops = ops or (WINDOW_OPS + (("projection0", "projection1") if S.dim == 2 else ()))
    B = S.max_constant()
    return {W: all(window_check(op, S, W) for op in ops) for W in windows if W > B + 2}
