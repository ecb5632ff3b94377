"""Finite topological spaces stored as specialization preorders.

Orientation used everywhere in the package: ``x <= y`` iff ``y`` lies in the
closure of ``x``.  Hence

* the closure of a point is its up-set ``up(x) = {y : x <= y}``,
* closed sets are up-sets and open sets are down-sets,
* the smallest open set containing ``x`` is ``down(x) = {z : z <= x}``.

Point sets are plain ``frozenset`` objects of point indices; every operation
that takes one also takes the space it lives in.  Internally each point carries
two bitmask rows (``up`` and ``down``) so set algebra is integer arithmetic.
"""

from __future__ import annotations

import json
from itertools import combinations

from .errors import PointOutOfRange, TransitivityViolation


def bits(mask):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(points):
    mask = 0
    for p in points:
        mask |= 1 << p
    return mask


def to_set(mask):
    return frozenset(bits(mask))


class FinSpace:
    """A finite topological space on the points ``0..n-1``.

    Instances are immutable and hashable; two spaces compare equal when they
    have the same labeled specialization preorder.
    """

    __slots__ = ("n", "up", "down", "_full")

    def __init__(self, n, up):
        up = tuple(int(r) for r in up)
        if len(up) != n:
            raise ValueError(f"expected {n} rows, got {len(up)}")
        full = (1 << n) - 1
        for x, row in enumerate(up):
            if row & ~full:
                raise PointOutOfRange(f"row {x} references a point >= {n}")
            if not row >> x & 1:
                raise ValueError(f"relation is not reflexive at {x}")
        for x, row in enumerate(up):
            for y in bits(row):
                if up[y] & ~row:
                    z = next(bits(up[y] & ~row))
                    raise TransitivityViolation(f"{x}<={y} and {y}<={z} but not {x}<={z}")
        down = [0] * n
        for x, row in enumerate(up):
            for y in bits(row):
                down[y] |= 1 << x
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "up", up)
        object.__setattr__(self, "down", tuple(down))
        object.__setattr__(self, "_full", full)

    def __setattr__(self, name, value):
        raise AttributeError("FinSpace is immutable")

    def __reduce__(self):
        return (FinSpace._trusted, (self.n, self.up))

    # -- constructors -------------------------------------------------------

    @classmethod
    def _trusted(cls, n, up):
        """Skip validation; ``up`` must already be a reflexive transitive relation."""
        self = object.__new__(cls)
        down = [0] * n
        for x, row in enumerate(up):
            for y in bits(row):
                down[y] |= 1 << x
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "up", tuple(up))
        object.__setattr__(self, "down", tuple(down))
        object.__setattr__(self, "_full", (1 << n) - 1)
        return self

    @classmethod
    def from_pairs(cls, n, pairs, close=False):
        """Build from ``(x, y)`` pairs meaning ``x <= y``; reflexivity is added.

        With ``close=True`` the transitive closure is taken instead of
        rejecting non-transitive input.
        """
        up = [1 << x for x in range(n)]
        for x, y in pairs:
            if not (0 <= x < n and 0 <= y < n):
                raise PointOutOfRange(f"pair ({x}, {y}) outside 0..{n - 1}")
            up[x] |= 1 << y
        if close:
            up = _transitive_closure(up)
        return cls(n, up)

    @classmethod
    def from_matrix(cls, le):
        n = len(le)
        return cls(n, [to_mask(y for y in range(n) if le[x][y]) for x in range(n)])

    @classmethod
    def from_open_sets(cls, n, subbase):
        """The space whose topology is generated by ``subbase``.

        ``x <= y`` iff every subbase member containing ``y`` also contains
        ``x``; the generated topology is never materialized.
        """
        masks = []
        for member in subbase:
            m = to_mask(member)
            if m >> n:
                raise PointOutOfRange(f"subbase member {sorted(member)} not within 0..{n - 1}")
            masks.append(m)
        up = []
        for x in range(n):
            row = 0
            for y in range(n):
                if all(m >> x & 1 for m in masks if m >> y & 1):
                    row |= 1 << y
            up.append(row)
        return cls(n, up)

    @classmethod
    def discrete(cls, n):
        return cls(n, [1 << x for x in range(n)])

    @classmethod
    def indiscrete(cls, n):
        return cls(n, [(1 << n) - 1] * n)

    # -- basics --------------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, FinSpace) and self.n == other.n and self.up == other.up

    def __hash__(self):
        return hash((self.n, self.up))

    def __repr__(self):
        return f"FinSpace(n={self.n}, le={self.pairs()})"

    def __len__(self):
        return self.n

    @property
    def points(self):
        return range(self.n)

    @property
    def full_mask(self):
        return self._full

    def leq(self, x, y):
        return bool(self.up[x] >> y & 1)

    def le_matrix(self):
        return [[self.leq(x, y) for y in range(self.n)] for x in range(self.n)]

    def pairs(self):
        """Non-reflexive ``(x, y)`` pairs with ``x <= y``, sorted."""
        return [(x, y) for x in range(self.n) for y in bits(self.up[x]) if x != y]

    def _check_point(self, x):
        if not 0 <= x < self.n:
            raise PointOutOfRange(f"point {x} not in 0..{self.n - 1}")

    def _mask(self, S):
        if isinstance(S, int):
            return S
        m = to_mask(S)
        if m & ~self._full:
            raise PointOutOfRange(f"set {sorted(S)} not within 0..{self.n - 1}")
        return m

    # -- open/closed primitives ----------------------------------------------

    def up_mask(self, S):
        m = 0
        for x in bits(self._mask(S)):
            m |= self.up[x]
        return m

    def down_mask(self, S):
        m = 0
        for x in bits(self._mask(S)):
            m |= self.down[x]
        return m

    def closure(self, S):
        return to_set(self.up_mask(S))

    def interior(self, S):
        comp = self._full & ~self._mask(S)
        return to_set(self._full & ~self.up_mask(comp))

    def is_open(self, S):
        m = self._mask(S)
        return self.down_mask(m) == m

    def is_closed(self, S):
        m = self._mask(S)
        return self.up_mask(m) == m

    def min_open(self, x):
        self._check_point(x)
        return to_set(self.down[x])

    def point_closure(self, x):
        self._check_point(x)
        return to_set(self.up[x])

    def open_masks(self):
        """All open sets (down-sets) as bitmasks, in increasing numeric order."""
        return sorted(_downsets(self))

    def open_sets(self):
        return [to_set(m) for m in self.open_masks()]

    def closed_sets(self):
        return [to_set(self._full & ~m) for m in self.open_masks()]

    def indistinguishable_pairs(self):
        return [(x, y) for x, y in combinations(range(self.n), 2)
                if self.leq(x, y) and self.leq(y, x)]

    def subspace_order(self, S):
        """Induced sub-preorder on the sorted points of ``S`` (relabeled 0..k-1)."""
        pts = sorted(bits(self._mask(S)))
        index = {p: i for i, p in enumerate(pts)}
        up = [to_mask(index[q] for q in bits(self.up[p]) if q in index) for p in pts]
        return FinSpace(len(pts), up), pts

    # -- serialization -------------------------------------------------------

    def to_dict(self):
        return {"n": self.n, "le": [list(p) for p in self.pairs()]}

    @classmethod
    def from_dict(cls, data):
        return cls.from_pairs(int(data["n"]), [tuple(p) for p in data.get("le", [])])

    def to_json(self, **kw):
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def to_dot(self, name="space"):
        """Graphviz source for the Hasse diagram of the T0 quotient.

        Each node is one indistinguishability class, labeled by its members.
        """
        classes = t0_classes(self)
        rep = [c[0] for c in classes]
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for i, c in enumerate(classes):
            label = ",".join(str(p) for p in c)
            lines.append(f'  c{i} [label="{label}"];')
        k = len(classes)
        for i in range(k):
            for j in range(k):
                if i == j or not self.leq(rep[i], rep[j]):
                    continue
                # cover relation: no class strictly between
                if any(m not in (i, j) and self.leq(rep[i], rep[m]) and self.leq(rep[m], rep[j])
                       for m in range(k)):
                    continue
                lines.append(f"  c{i} -> c{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _transitive_closure(up):
    up = list(up)
    n = len(up)
    for k in range(n):
        for x in range(n):
            if up[x] >> k & 1:
                up[x] |= up[k]
    return up


def _downsets(X):
    """Enumerate all down-sets as unions of minimal open sets."""
    seen = {0}
    frontier = [0]
    while frontier:
        m = frontier.pop()
        for x in range(X.n):
            if not m >> x & 1:
                nm = m | X.down[x]
                if nm not in seen:
                    seen.add(nm)
                    frontier.append(nm)
    return seen


def t0_classes(X):
    """Indistinguishability classes as sorted tuples, ordered by least member."""
    seen = 0
    out = []
    for x in range(X.n):
        if seen >> x & 1:
            continue
        cls = X.up[x] & X.down[x]
        seen |= cls
        out.append(tuple(bits(cls)))
    return out


# -- canonical form ------------------------------------------------------------

def _refine_colors(X):
    n = X.n
    color = [(bin(X.up[x]).count("1"), bin(X.down[x]).count("1")) for x in range(n)]
    palette = sorted(set(color))
    col = [palette.index(c) for c in color]
    ncol = len(palette)
    while True:
        sig = [(col[x],
                tuple(sorted(col[y] for y in bits(X.up[x]))),
                tuple(sorted(col[y] for y in bits(X.down[x]))))
               for x in range(n)]
        palette = sorted(set(sig))
        lookup = {s: i for i, s in enumerate(palette)}
        new = [lookup[s] for s in sig]
        if len(palette) == ncol:
            return new
        col, ncol = new, len(palette)


def _twin_classes(X):
    """Map each point to the least point it can be swapped with by an automorphism
    that is a transposition (identical relations to all other points)."""
    n = X.n
    rep = list(range(n))
    for x in range(n):
        if rep[x] != x:
            continue
        for y in range(x + 1, n):
            if rep[y] != y or X.leq(x, y) != X.leq(y, x):
                continue
            others = X._full & ~(1 << x) & ~(1 << y)
            if X.up[x] & others == X.up[y] & others and X.down[x] & others == X.down[y] & others:
                rep[y] = x
    return rep


def canonical_labeling(X):
    """Return ``(canonical_space, order)`` where ``order[k]`` is the original
    point placed at canonical position ``k``.

    Points are ordered by a refined colour (an isomorphism invariant); ties are
    resolved by a pruned backtracking search for the lexicographically smallest
    relation encoding.
    """
    n = X.n
    if n == 0:
        return X, []
    color = _refine_colors(X)
    twin = _twin_classes(X)
    best_code = None
    best_order = None
    order = []

    def row(p):
        code = 0
        for q in order:
            code = code << 2 | (X.up[p] >> q & 1) << 1 | (X.up[q] >> p & 1)
        return code

    def search(remaining, code):
        nonlocal best_code, best_order
        if not remaining:
            if best_code is None or code < best_code:
                best_code, best_order = code, list(order)
            return
        c = min(color[p] for p in remaining)
        tried = set()
        for p in sorted(remaining):
            if color[p] != c or twin[p] in tried:
                continue
            tried.add(twin[p])
            new = code + (row(p),)
            if best_code is not None and new > best_code[:len(new)]:
                continue
            order.append(p)
            search(remaining - {p}, new)
            order.pop()

    search(frozenset(range(n)), tuple(color[p] for p in sorted(range(n), key=color.__getitem__)))
    pos = {p: k for k, p in enumerate(best_order)}
    up = [to_mask(pos[q] for q in bits(X.up[p])) for p in best_order]
    return FinSpace(n, up), best_order


def canonical_form(X):
    return canonical_labeling(X)[0]


def canonical_code(X):
    """Sortable key of the canonical form: ``(n, rows)``."""
    C = canonical_form(X)
    return (C.n, C.up)


def is_homeomorphic(X, Y):
    if X.n != Y.n:
        return False
    if sorted(bin(r).count("1") for r in X.up) != sorted(bin(r).count("1") for r in Y.up):
        return False
    return canonical_form(X) == canonical_form(Y)


def relabel(X, perm):
    """Image of ``X`` under the bijection ``x -> perm[x]``."""
    up = [0] * X.n
    for x in range(X.n):
        up[perm[x]] = to_mask(perm[y] for y in bits(X.up[x]))
    return FinSpace(X.n, up)


# named small spaces used across the package and its tests

def sierpinski():
    """The two-point space with opens {}, {0}, {0,1}."""
    return FinSpace.from_pairs(2, [(0, 1)])


def e_space():
    """Three points with opens {}, {0}, {0,1,2}; points 1 and 2 are indistinguishable."""
    return FinSpace.from_pairs(3, [(0, 1), (0, 2), (1, 2), (2, 1)])


def v_space():
    """Point 2 lies below both 0 and 1: the smallest non-normal space."""
    return FinSpace.from_pairs(3, [(2, 0), (2, 1)])


def lambda_space():
    """Points 0 and 1 lie below the top 2."""
    return FinSpace.from_pairs(3, [(0, 2), (1, 2)])
