"""Separation and compactness-flavoured properties of finite spaces.

Normality has an order characterization on finite spaces: the smallest open
set containing a closed set ``F`` is ``down(F)``, so disjoint closed ``F`` and
``H`` separate iff ``down(F)`` and ``down(H)`` are disjoint.  Taking
``F = up(x)`` and ``H = up(y)`` shows that a space is normal iff any two points
with a common lower bound also have a common upper bound.

Finite T1 spaces are discrete, and so are finite Hausdorff spaces; the package
exposes that single notion as :func:`is_t1_discrete`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import bits, to_set


@dataclass(frozen=True)
class PropertyReport:
    property: str
    verdict: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.verdict

    def to_dict(self):
        d = {"property": self.property, "verdict": self.verdict}
        if self.witness is not None:
            d["witness"] = [sorted(w) if isinstance(w, frozenset) else w for w in self.witness]
        return d


def is_t0(X):
    return all(X.up[x] & X.down[x] == 1 << x for x in range(X.n))


def is_t1_discrete(X):
    return all(X.up[x] == 1 << x for x in range(X.n))


def normality_obstruction(X):
    """First pair ``(x, y)`` with a common lower bound but no common upper bound."""
    for x, y in combinations(range(X.n), 2):
        if X.down[x] & X.down[y] and not X.up[x] & X.up[y]:
            return x, y
    return None


def is_normal(X):
    bad = normality_obstruction(X)
    if bad is None:
        return PropertyReport("normal", True)
    x, y = bad
    return PropertyReport("normal", False, (to_set(X.up[x]), to_set(X.up[y])))


def is_normal_bruteforce(X):
    """Literal definition: every pair of disjoint closed sets lies in disjoint opens."""
    full = X.full_mask
    opens = X.open_masks()
    closed = [full & ~u for u in opens]
    for i, F in enumerate(closed):
        for H in closed[i:]:
            if F & H:
                continue
            if not any(F & ~U == 0 and H & ~V == 0 and not U & V
                       for U in opens for V in opens):
                return False
    return True


def is_vn_point(X, x):
    X._check_point(x)
    return all(X.up[x] & X.up[y] for y in range(X.n))


def is_vacuously_normal(X):
    for x, y in combinations(range(X.n), 2):
        if not X.up[x] & X.up[y]:
            return PropertyReport("vacnormal", False, (to_set(X.up[x]), to_set(X.up[y])))
    return PropertyReport("vacnormal", True)


def is_vacuously_normal_bruteforce(X):
    full = X.full_mask
    closed = [full & ~u for u in X.open_masks()]
    return not any(F and H and not F & H for F in closed for H in closed)


def is_irreducible(X):
    return all(X.down[x] & X.down[y] for x, y in combinations(range(X.n), 2))


def is_trivially_compact(X):
    return any(d == X.full_mask for d in X.down) if X.n else False


def is_locally_finite(X, family):
    """Every point has a neighbourhood meeting finitely many members.

    ``family`` is a finite list, so each minimal open set meets at most
    ``len(family)`` members and the answer is always true.
    """
    for S in family:
        X._mask(S)
    return True


def is_discrete_family(X, family):
    """Every point's minimal open set meets at most one member."""
    masks = [X._mask(S) for S in family]
    return all(sum(1 for m in masks if m & X.down[x]) <= 1 for x in range(X.n))


def is_loosely_compact(X):
    """Each discrete family of nonempty closed sets is finite.

    Members of a discrete family are pairwise disjoint, so such a family has
    at most ``X.n`` members.
    """
    return True


def is_lightly_compact(X):
    """Each locally finite family of nonempty open sets is finite.

    A family of distinct subsets of a finite space has at most ``2**n`` members.
    """
    return True


def common_upper_bound(X, x, y):
    m = X.up[x] & X.up[y]
    return next(bits(m)) if m else None


PREDICATES = {
    "normal": lambda X: is_normal(X).verdict,
    "vacnormal": lambda X: is_vacuously_normal(X).verdict,
    "t0": is_t0,
    "t1": is_t1_discrete,
    "irreducible": is_irreducible,
    "trivcompact": is_trivially_compact,
    "looselycompact": is_loosely_compact,
    "lightlycompact": is_lightly_compact,
}


def check(X, name):
    """Evaluate a property by name and return a :class:`PropertyReport`."""
    if name == "normal":
        return is_normal(X)
    if name == "vacnormal":
        return is_vacuously_normal(X)
    try:
        fn = PREDICATES[name]
    except KeyError:
        raise KeyError(f"unknown property {name!r}; known: {sorted(PREDICATES)}") from None
    verdict = fn(X)
    witness = None
    if not verdict:
        witness = _witness(X, name)
    return PropertyReport(name, verdict, witness)


def _witness(X, name):
    if name == "t0":
        x, y = X.indistinguishable_pairs()[0]
        return (x, y)
    if name == "t1":
        x = next(x for x in range(X.n) if X.up[x] != 1 << x)
        y = next(y for y in bits(X.up[x]) if y != x)
        return (x, y)
    if name == "irreducible":
        x, y = next((x, y) for x, y in combinations(range(X.n), 2) if not X.down[x] & X.down[y])
        return (to_set(X.down[x]), to_set(X.down[y]))
    if name == "trivcompact":
        # the cover by minimal open sets has no member equal to X
        return tuple(sorted({to_set(d) for d in X.down}, key=sorted))
    return None
