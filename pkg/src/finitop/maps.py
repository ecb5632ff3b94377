"""Maps between finite spaces: continuity, open/closed/very open maps,
retractions and the T0 quotient.

Closed- and open-map checks only look at images of point closures and
minimal open sets.  Every closed set is a finite union of point closures and
images commute with unions, so this is exact.

A continuous ``f`` is very open iff it is open and any two points in the same
fiber have a common lower bound.  If ``f(u) = f(v)`` while ``down(u)`` and
``down(v)`` are disjoint, those two opens have meeting images.  Conversely,
two disjoint opens containing same-fiber points ``u`` and ``v`` would both
contain a common lower bound of ``u`` and ``v``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .core import FinSpace, bits, t0_classes, to_mask, to_set
from .errors import DomainMismatch, NotARetraction, NotContinuous, PointOutOfRange
from .props import is_irreducible, is_normal, is_t1_discrete, is_vacuously_normal


@dataclass(frozen=True)
class PointMap:
    dom: FinSpace
    cod: FinSpace
    values: tuple

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        if len(vals) != self.dom.n:
            raise ValueError(f"map needs {self.dom.n} values, got {len(vals)}")
        for v in vals:
            if not 0 <= v < self.cod.n:
                raise PointOutOfRange(f"value {v} outside codomain 0..{self.cod.n - 1}")
        object.__setattr__(self, "values", vals)

    def __call__(self, x):
        return self.values[x]

    def image_mask(self, S):
        m = 0
        for x in bits(S):
            m |= 1 << self.values[x]
        return m

    def image(self, S):
        return to_set(self.image_mask(self.dom._mask(S)))

    def preimage_mask(self, T):
        return to_mask(x for x, v in enumerate(self.values) if T >> v & 1)

    def preimage(self, T):
        return to_set(self.preimage_mask(self.cod._mask(T)))

    def compose(self, other):
        """``self`` after ``other``."""
        if other.cod != self.dom:
            raise DomainMismatch("codomain of the inner map differs from the domain of the outer")
        return PointMap(other.dom, self.cod, tuple(self.values[v] for v in other.values))

    def to_dict(self):
        return {"dom": self.dom.to_dict(), "cod": self.cod.to_dict(), "values": list(self.values)}

    @classmethod
    def from_dict(cls, d):
        return cls(FinSpace.from_dict(d["dom"]), FinSpace.from_dict(d["cod"]), tuple(d["values"]))

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


def identity(X):
    return PointMap(X, X, tuple(range(X.n)))


def is_continuous(f):
    """Monotone: ``x <= y`` implies ``f(x) <= f(y)``."""
    cod = f.cod
    return all(cod.leq(f.values[x], f.values[y])
               for x in range(f.dom.n) for y in bits(f.dom.up[x]))


def continuous_maps(dom, cod):
    """Every continuous map ``dom -> cod``, by backtracking over monotone assignments."""
    n = dom.n
    vals = [0] * n

    def ok(x, y):
        for z in range(x):
            if dom.leq(z, x) and not cod.leq(vals[z], y):
                return False
            if dom.leq(x, z) and not cod.leq(y, vals[z]):
                return False
        return True

    def rec(x):
        if x == n:
            yield PointMap(dom, cod, tuple(vals))
            return
        for y in range(cod.n):
            if ok(x, y):
                vals[x] = y
                yield from rec(x + 1)

    yield from rec(0)


def random_continuous_map(dom, cod, rng, tries=100):
    """A random continuous map, or None if none turned up in ``tries`` attempts."""
    order = sorted(range(dom.n), key=lambda x: bin(dom.down[x]).count("1"))
    for _ in range(tries):
        vals = {}
        for x in order:
            cand = cod.full_mask
            for z, v in vals.items():
                if dom.leq(z, x):
                    cand &= cod.up[v]
                if dom.leq(x, z):
                    cand &= cod.down[v]
            if not cand:
                break
            vals[x] = rng.choice(list(bits(cand)))
        else:
            return PointMap(dom, cod, tuple(vals[x] for x in range(dom.n)))
    return None


def is_continuous_by_preimages(f):
    """Preimage of every open set is open (used as an independent check)."""
    return all(f.dom.is_open(f.preimage_mask(U)) for U in f.cod.open_masks())


def _require_continuous(f):
    if not is_continuous(f):
        raise NotContinuous("map is not continuous (not monotone)")


def is_open_map(f):
    _require_continuous(f)
    return all(f.cod.is_open(f.image_mask(f.dom.down[x])) for x in range(f.dom.n))


def is_closed_map(f):
    _require_continuous(f)
    return all(f.cod.is_closed(f.image_mask(f.dom.up[x])) for x in range(f.dom.n))


def is_very_open(f):
    if not is_open_map(f):
        return False
    dom = f.dom
    for u in range(dom.n):
        for v in range(u + 1, dom.n):
            if f.values[u] == f.values[v] and not dom.down[u] & dom.down[v]:
                return False
    return True


def is_very_open_literal(f):
    """Exhaust all pairs of disjoint open sets (the empty set included)."""
    _require_continuous(f)
    opens = f.dom.open_masks()
    for i, U in enumerate(opens):
        fU = f.image_mask(U)
        if not f.cod.is_open(fU):
            return False
        for V in opens[i + 1:]:
            if not U & V and fU & f.image_mask(V):
                return False
    return True


def is_retraction(r):
    if r.dom != r.cod:
        raise DomainMismatch("a retraction maps a space to itself")
    return is_continuous(r) and all(r.values[v] == v for v in r.values)


def fixed_points(r):
    return frozenset(x for x, v in enumerate(r.values) if v == x)


def fiber(f, y):
    """Subspace ``f^-1(y)`` with the induced preorder (empty space if no preimage)."""
    return f.dom.subspace_order(f.preimage_mask(1 << y))[0]


def corestrict(f):
    """``f`` as a surjection onto its image subspace; returns ``(map, image points)``."""
    img = f.image_mask(f.dom.full_mask)
    Z, pts = f.cod.subspace_order(img)
    index = {p: i for i, p in enumerate(pts)}
    return PointMap(f.dom, Z, tuple(index[v] for v in f.values)), pts


def product_map(f, g):
    from .construct import product  # local: construct depends on this module

    dom = product(f.dom, g.dom)
    cod = product(f.cod, g.cod)
    vals = tuple(f.values[a] * g.cod.n + g.values[b]
                 for a in range(f.dom.n) for b in range(g.dom.n))
    return PointMap(dom, cod, vals)


@dataclass(frozen=True)
class RetractionReport:
    normal_x: bool
    normal_z: bool
    z_t1: bool
    fibers_vacuously_normal: bool
    r_closed: bool
    clause_a: bool
    clause_b: bool
    clause_c: bool
    z: frozenset = field(default_factory=frozenset)

    @property
    def holds(self):
        return self.clause_a and self.clause_b and self.clause_c

    def to_dict(self):
        d = dict(self.__dict__)
        d["z"] = sorted(self.z)
        return d


def check_1_5_1(r):
    """Evaluate the three retraction clauses on a concrete retraction.

    (a) X normal implies Z normal; (b) Z normal, fibers vacuously normal and
    r closed imply X normal; (c) X and Z normal, Z T1 and fibers vacuously
    normal imply r closed.  ``r`` is treated as a map onto its range ``Z``.
    """
    if not is_retraction(r):
        raise NotARetraction("map is not a continuous idempotent self-map")
    onto, pts = corestrict(r)
    Z = onto.cod
    nx = is_normal(r.dom).verdict
    nz = is_normal(Z).verdict
    zt1 = is_t1_discrete(Z)
    fibers_vn = all(is_vacuously_normal(fiber(r, z)).verdict for z in pts)
    closed = is_closed_map(onto)
    return RetractionReport(
        normal_x=nx,
        normal_z=nz,
        z_t1=zt1,
        fibers_vacuously_normal=fibers_vn,
        r_closed=closed,
        clause_a=(not nx) or nz,
        clause_b=(not (nz and fibers_vn and closed)) or nx,
        clause_c=(not (nx and nz and zt1 and fibers_vn)) or closed,
        z=frozenset(pts),
    )


def t0_quotient(X):
    """Collapse indistinguishable points; returns ``(quotient, quotient map)``."""
    classes = t0_classes(X)
    where = {}
    for i, c in enumerate(classes):
        for p in c:
            where[p] = i
    up = [to_mask(where[q] for q in bits(X.up[c[0]])) for c in classes]
    Q = FinSpace(len(classes), up)
    return Q, PointMap(X, Q, tuple(where[x] for x in range(X.n)))


def fibers_irreducible(f):
    return all(is_irreducible(fiber(f, y)) for y in bits(f.image_mask(f.dom.full_mask)))
