"""Space constructions: products, sums, subspaces, the one-point extension,
cubes, chains, the divisor space, and the compact-normal decomposition.

For finitely many finite factors the product topology coincides with the
Alexandroff topology of the componentwise order: a basic open box
``down(a) x down(b)`` is exactly ``down((a, b))``.  This fails for infinite
products, which are out of reach here anyway.

Product points are mixed-radix integers, row-major: ``(a, b)`` is
``a * len(Y) + b`` and a ``k``-th power point ``(c_0, ..., c_{k-1})`` is
``sum(c_i * m**(k-1-i))``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .core import FinSpace, bits, e_space, sierpinski, to_mask, to_set
from .errors import EmptySubspace, NotNormal, NotT0, SizeOverflow
from .maps import PointMap
from .props import is_normal, is_t0

DEFAULT_MAX_POINTS = 4096


def max_points():
    env = os.environ.get("FINITOP_MAX_POINTS")
    return int(env) if env else DEFAULT_MAX_POINTS


def _check_size(n, limit=None):
    limit = max_points() if limit is None else limit
    if n > limit:
        raise SizeOverflow(f"construction would have {n} points (limit {limit})")


def product(X, Y, limit=None):
    _check_size(X.n * Y.n, limit)
    m = Y.n
    up = []
    for a in range(X.n):
        for b in range(m):
            row = 0
            for a2 in bits(X.up[a]):
                row |= Y.up[b] << (a2 * m)
            up.append(row)
    return FinSpace(X.n * m, up)


def power(X, k, limit=None):
    if k < 0:
        raise ValueError("exponent must be >= 0")
    _check_size(X.n ** k, limit)
    result = FinSpace(1, [1])
    for _ in range(k):
        result = product(result, X, limit)
    return result


def coordinates(index, radix, k):
    """Mixed-radix digits of a power point, most significant first."""
    digits = []
    for _ in range(k):
        index, d = divmod(index, radix)
        digits.append(d)
    return tuple(reversed(digits))


def point_index(coords, radix):
    idx = 0
    for c in coords:
        idx = idx * radix + c
    return idx


def sum_(X, Y):
    """Disjoint union; points of ``Y`` are shifted by ``len(X)``."""
    return FinSpace(X.n + Y.n, list(X.up) + [r << X.n for r in Y.up])


def subspace(X, S):
    m = X._mask(S)
    if not m:
        raise EmptySubspace("subspace needs at least one point")
    return X.subspace_order(m)[0]


def star_extension(X):
    """Add a point that lies above every point; it becomes the last point."""
    p = X.n
    return FinSpace(X.n + 1, [r | 1 << p for r in X.up] + [1 << p])


def projection(X, Y, axis):
    """Projection of ``product(X, Y)`` onto factor ``axis`` (0 or 1)."""
    P = product(X, Y)
    m = Y.n
    if axis == 0:
        return PointMap(P, X, tuple(i // m for i in range(P.n)))
    return PointMap(P, Y, tuple(i % m for i in range(P.n)))


CUBE_BASES = {
    "sierpinski": sierpinski,
    "discrete2": lambda: FinSpace.discrete(2),
    "e_space": e_space,
}


def cube(base, k, limit=None):
    """``base``-cube of exponent ``k``: the Alexandroff cube for ``sierpinski``,
    the Cantor cube for ``discrete2`` and the Engelking cube for ``e_space``."""
    try:
        B = CUBE_BASES[base]()
    except KeyError:
        raise ValueError(f"unknown cube base {base!r}; choose from {sorted(CUBE_BASES)}") from None
    return power(B, k, limit)


def chain_lower(k):
    """``k``-point chain whose open sets are initial segments."""
    return FinSpace(k, [((1 << k) - 1) & ~((1 << i) - 1) for i in range(k)])


def chain_upper(k):
    """``k``-point chain whose open sets are final segments."""
    return FinSpace(k, [(1 << (i + 1)) - 1 for i in range(k)])


def divisor_space(N):
    """Points ``2..N`` (index ``i`` is the integer ``i + 2``) with the topology
    generated by the divisor sets ``{m : m divides n}``."""
    if N < 2:
        raise ValueError("N must be >= 2")
    pts = list(range(2, N + 1))
    subbase = [{i for i, m in enumerate(pts) if n % m == 0} for n in pts]
    return FinSpace.from_open_sets(len(pts), subbase)


def embedding_points(k, limit=None):
    """Coordinate vectors of the chain embeddings into the ``k``-cubes.

    ``s_a[b] = (a > b)`` and ``t_a[b] = (a <= b)`` for ``b < k``; ``S`` and
    ``T`` use ``a < k`` while ``S*`` and ``T*`` also include ``a = k``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_size(2 ** k, limit)

    def s(a):
        return tuple(int(a > b) for b in range(k))

    def t(a):
        return tuple(int(a <= b) for b in range(k))

    return {
        "S": [s(a) for a in range(k)],
        "S*": [s(a) for a in range(k + 1)],
        "T": [t(a) for a in range(k)],
        "T*": [t(a) for a in range(k + 1)],
    }


def embedded_subspace(base, k, vectors):
    """Subspace of ``cube(base, k)`` on the given coordinate vectors."""
    C = cube(base, k)
    idx = [point_index(v, 2) for v in vectors]
    return subspace(C, idx)


def verify_embeddings(k):
    """Homeomorphism verdicts for the chain embeddings at exponent ``k``."""
    from .core import is_homeomorphic

    pts = embedding_points(k)
    return {
        "S_in_A~chain_lower(k)": is_homeomorphic(embedded_subspace("sierpinski", k, pts["S"]), chain_lower(k)),
        "S*_in_A~chain_lower(k+1)": is_homeomorphic(embedded_subspace("sierpinski", k, pts["S*"]), chain_lower(k + 1)),
        "T_in_A~chain_upper(k)": is_homeomorphic(embedded_subspace("sierpinski", k, pts["T"]), chain_upper(k)),
        "T*_in_A~chain_upper(k+1)": is_homeomorphic(embedded_subspace("sierpinski", k, pts["T*"]), chain_upper(k + 1)),
        "S_in_C~discrete(k)": is_homeomorphic(embedded_subspace("discrete2", k, pts["S"]), FinSpace.discrete(k)),
        "S*_in_C~discrete(k+1)": is_homeomorphic(embedded_subspace("discrete2", k, pts["S*"]), FinSpace.discrete(k + 1)),
    }


@dataclass(frozen=True)
class Decomposition:
    r: PointMap
    z: frozenset
    fibers: tuple

    def to_dict(self):
        return {"r": list(self.r.values), "z": sorted(self.z), "fibers": [sorted(f) for f in self.fibers]}

    def to_dot(self, name="decomposition"):
        X = self.r.dom
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for i, fib in enumerate(self.fibers):
            lines.append(f"  subgraph cluster_{i} {{")
            lines.append(f'    label="fiber of {max(fib, key=lambda p: bin(X.down[p]).count("1"))}";')
            for p in sorted(fib):
                lines.append(f"    p{p};")
            lines.append("  }")
        for x in range(X.n):
            for y in bits(X.up[x]):
                if x == y:
                    continue
                if any(m not in (x, y) and X.leq(x, m) and X.leq(m, y) for m in range(X.n)):
                    continue
                lines.append(f"  p{x} -> p{y};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def maximal_points(X):
    return frozenset(x for x in range(X.n) if X.up[x] & ~X.down[x] == 0)


def normal_t0_decomposition(X):
    """Retract a normal T0 space onto its maximal points.

    Each point is sent to the unique maximal point above it.  Fibers are the
    minimal open sets of the maximal points.
    """
    if not is_t0(X):
        raise NotT0("decomposition needs a T0 space")
    rep = is_normal(X)
    if not rep.verdict:
        raise NotNormal("decomposition needs a normal space", rep.witness)
    top = maximal_points(X)
    top_mask = to_mask(top)
    values = []
    for x in range(X.n):
        above = X.up[x] & top_mask
        # normal T0: exactly one maximal point above x
        values.append(next(bits(above)))
    r = PointMap(X, X, tuple(values))
    fibers = tuple(to_set(X.down[p]) for p in sorted(top))
    return Decomposition(r, top, fibers)


def decomposition_is_valid(X, dec):
    """Check every structural claim about a decomposition."""
    from .maps import corestrict, fiber, is_closed_map, is_retraction
    from .props import is_t1_discrete, is_trivially_compact, is_vacuously_normal

    r = dec.r
    if not is_retraction(r):
        return False
    if frozenset(x for x, v in enumerate(r.values) if v == x) != dec.z:
        return False
    onto, pts = corestrict(r)
    if not is_t1_discrete(onto.cod) or not is_closed_map(onto):
        return False
    seen = 0
    for p, fib in zip(sorted(dec.z), dec.fibers):
        if fib != to_set(X.down[p]) or fib != frozenset(x for x in range(X.n) if r.values[x] == p):
            return False
        F = fiber(r, p)
        if not is_trivially_compact(F) or not is_vacuously_normal(F).verdict:
            return False
        if seen & to_mask(fib):
            return False
        seen |= to_mask(fib)
    return seen == X.full_mask
