"""Exhaustive and randomized theorem checks over the enumeration.

Each suite walks a corpus of small spaces (or maps between them), evaluates
one implication or equivalence, and records the first failure it meets.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from . import construct, covers, props
from .core import is_homeomorphic, relabel, to_set
from .errors import NotNormal, UnknownSuite
from .maps import (PointMap, check_1_5_1, continuous_maps, fibers_irreducible, is_closed_map,
                   is_continuous, is_open_map, is_retraction, is_very_open, is_very_open_literal,
                   product_map, random_continuous_map, t0_quotient)
from .search import enumerate_spaces, spaces_up_to


@dataclass
class SuiteReport:
    suite: str
    max_n: int
    checked: int = 0
    failures: int = 0
    first_failure: dict | None = None
    elapsed_ms: float = 0.0
    notes: dict = field(default_factory=dict)

    @property
    def verdict(self):
        return "pass" if self.failures == 0 else "fail"

    @property
    def passed(self):
        return self.failures == 0

    def record(self, ok, witness):
        self.checked += 1
        if not ok:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = witness() if callable(witness) else witness

    def to_dict(self):
        return {"suite": self.suite, "max_n": self.max_n, "verdict": self.verdict,
                "checked": self.checked, "failures": self.failures,
                "first_failure": self.first_failure, "notes": self.notes,
                "elapsed_ms": round(self.elapsed_ms, 3)}


def _labeled(max_n, t0_only=False):
    return [X for n in range(1, max_n + 1) for X in enumerate_spaces(n, t0_only)]


def _sp(**spaces):
    return {k: v.to_dict() for k, v in spaces.items()}


def _map(f):
    return {"dom": f.dom.to_dict(), "cod": f.cod.to_dict(), "values": list(f.values)}


# -- suites ------------------------------------------------------------------

def _prop_3_1_product(rep, max_n, rng, samples):
    """Product is vacuously normal iff both factors are."""
    reps = spaces_up_to(max_n)
    vn = {X: props.is_vacuously_normal(X).verdict for X in reps}
    for X in reps:
        for Y in reps:
            lhs = props.is_vacuously_normal(construct.product(X, Y)).verdict
            rep.record(lhs == (vn[X] and vn[Y]), lambda: _sp(X=X, Y=Y))


def _prop_3_1_vn_points(rep, max_n, rng, samples):
    """Vacuously normal iff every point is a vn-point iff no disjoint nonempty closed pair."""
    for X in _labeled(max_n):
        pointwise = all(props.is_vn_point(X, x) for x in range(X.n))
        rep.record(pointwise == props.is_vacuously_normal(X).verdict == props.is_vacuously_normal_bruteforce(X),
                   lambda: _sp(X=X))
        rep.record(not pointwise or props.is_normal(X).verdict, lambda: _sp(X=X))


def _normal_fast(rep, max_n, rng, samples):
    """Order characterization of normality against disjoint closed pairs."""
    for X in _labeled(max_n):
        rep.record(props.is_normal(X).verdict == props.is_normal_bruteforce(X), lambda: _sp(X=X))


def _prop_2_2_3(rep, max_n, rng, samples):
    """Every 2-fold open cover has a shrinking iff the space is normal; ``shrink`` agrees."""
    for X in _labeled(max_n):
        normal = props.is_normal(X).verdict
        rep.record(covers.normal_via_shrinking(X) == normal, lambda: _sp(X=X))
        opens = X.open_masks()
        raised_somewhere = False
        for a in opens:
            for b in opens:
                if a | b != X.full_mask:
                    continue
                U = covers.Cover(X, (to_set(a), to_set(b)))
                try:
                    V = covers.shrink(U)
                except NotNormal:
                    raised_somewhere = True
                    rep.record(not normal, lambda: {**_sp(X=X), "cover": U.to_dict()})
                    continue
                rep.record(covers.is_shrinking(V, U), lambda: {**_sp(X=X), "cover": U.to_dict()})
        rep.record(normal or raised_somewhere, lambda: _sp(X=X))


def _thm_3_5(rep, max_n, rng, samples):
    """Normal T0 spaces retract onto their maximal points with well-behaved fibers."""
    for X in spaces_up_to(max_n, t0_only=True):
        normal = props.is_normal(X).verdict
        try:
            dec = construct.normal_t0_decomposition(X)
        except NotNormal:
            rep.record(not normal, lambda: _sp(X=X))
            continue
        rep.record(normal and construct.decomposition_is_valid(X, dec), lambda: _sp(X=X))
        report = check_1_5_1(dec.r)
        # rebuild normality from the decomposition through clause (b)
        rep.record(report.normal_z and report.fibers_vacuously_normal and report.r_closed and report.holds,
                   lambda: {**_sp(X=X), "report": report.to_dict()})


def _thm_3_5_b_product(rep, max_n, rng, samples):
    """Products of normal spaces are normal."""
    normals = [X for X in spaces_up_to(max_n) if props.is_normal(X).verdict]
    for X in normals:
        for Y in normals:
            rep.record(props.is_normal(construct.product(X, Y)).verdict, lambda: _sp(X=X, Y=Y))


def _prop_3_2_product(rep, max_n, rng, samples):
    """Vacuously normal times normal is normal, and the projection to the normal factor is closed."""
    reps = spaces_up_to(max_n)
    vns = [X for X in reps if props.is_vacuously_normal(X).verdict]
    normals = [Y for Y in reps if props.is_normal(Y).verdict]
    for X in vns:
        for Y in normals:
            ok = props.is_normal(construct.product(X, Y)).verdict and is_closed_map(construct.projection(X, Y, 1))
            rep.record(ok, lambda: _sp(X=X, Y=Y))


def _compact_projection(rep, max_n, rng, samples):
    """Projections along a finite (hence compact) factor are closed."""
    reps = spaces_up_to(max_n)
    for X in reps:
        for Y in reps:
            rep.record(is_closed_map(construct.projection(X, Y, 1)), lambda: _sp(X=X, Y=Y))


def _retractions(X):
    return [r for r in continuous_maps(X, X) if is_retraction(r)]


def _conjugate(r, perm):
    """``r`` transported along the relabeling ``x -> perm[x]``."""
    X = relabel(r.dom, perm)
    values = [0] * X.n
    for x, y in enumerate(r.values):
        values[perm[x]] = perm[y]
    return PointMap(X, X, tuple(values))


def _prop_1_5_1(rep, max_n, rng, samples):
    """Retraction clauses (a), (b), (c) on every retraction of every labeled space.

    Then ``samples`` retractions of randomly relabeled spaces of size at most 5.
    """
    for X in _labeled(max_n):
        for r in _retractions(X):
            report = check_1_5_1(r)
            rep.record(report.holds, lambda: {**_map(r), "report": report.to_dict()})
    if samples:
        pool = [r for X in spaces_up_to(5) for r in _retractions(X)]
        for _ in range(samples):
            r = rng.choice(pool)
            r = _conjugate(r, rng.sample(range(r.dom.n), r.dom.n))
            report = check_1_5_1(r)
            rep.record(is_retraction(r) and report.holds, lambda: {**_map(r), "report": report.to_dict()})
        rep.notes["random_retractions"] = samples


def _very_open_checks(rep, f):
    fast = is_very_open(f)
    rep.record(fast == is_very_open_literal(f), lambda: {"check": "fast==literal", **_map(f)})
    if is_open_map(f) and fibers_irreducible(f):
        rep.record(fast, lambda: {"check": "(a)", **_map(f)})
    surjective = len(set(f.values)) == f.cod.n
    if fast and surjective and props.is_normal(f.dom).verdict:
        rep.record(props.is_normal(f.cod).verdict, lambda: {"check": "(c)", **_map(f)})
    return fast


def _prop_1_5_3(rep, max_n, rng, samples):
    """Very open maps: fast test against the definition, and clauses (a), (b), (c).

    Exhaustive over all continuous maps between labeled spaces of size at most
    ``min(max_n, 3)``; clause (b) pairs every very open map between
    representatives of that size.  Then ``samples`` random maps between spaces
    of size at most 5.
    """
    exhaustive_n = min(max_n, 3)
    spaces = _labeled(exhaustive_n)
    for X in spaces:
        for Y in spaces:
            for f in continuous_maps(X, Y):
                _very_open_checks(rep, f)
    reps = spaces_up_to(exhaustive_n)
    vo = [f for X in reps for Y in reps for f in continuous_maps(X, Y) if is_very_open(f)]
    for f in vo:
        for g in vo:
            rep.record(is_very_open(product_map(f, g)), lambda: {"check": "(b)", "f": _map(f), "g": _map(g)})
    rep.notes["exhaustive_n"] = exhaustive_n
    rep.notes["product_pairs"] = len(vo) ** 2
    pool = spaces_up_to(5)
    drawn, prev = 0, None
    while drawn < samples:
        X, Y = (relabel(S, rng.sample(range(S.n), S.n)) for S in (rng.choice(pool), rng.choice(pool)))
        f = random_continuous_map(X, Y, rng)
        if f is None:
            continue
        drawn += 1
        if _very_open_checks(rep, f) and X.n <= 4:
            if prev is not None:
                rep.record(is_very_open(product_map(prev, f)),
                           lambda: {"check": "(b)", "f": _map(prev), "g": _map(f)})
            prev = f
    rep.notes["random_maps"] = drawn


def _obs_3_4(rep, max_n, rng, samples):
    """Irreducible normal spaces are trivially compact and vacuously normal."""
    for X in _labeled(max_n):
        if props.is_irreducible(X) and props.is_normal(X).verdict:
            rep.record(props.is_trivially_compact(X) and props.is_vacuously_normal(X).verdict,
                       lambda: _sp(X=X))
        else:
            rep.checked += 1


def _t0_quotient(rep, max_n, rng, samples):
    """The T0 quotient map is a very open surjection onto a T0 space and keeps normality."""
    for X in _labeled(max_n):
        Q, q = t0_quotient(X)
        ok = (props.is_t0(Q) and is_continuous(q) and len(set(q.values)) == Q.n and is_very_open(q)
              and props.is_normal(X).verdict == props.is_normal(Q).verdict)
        rep.record(ok, lambda: _sp(X=X))


def _obs_1_2_2(rep, max_n, rng, samples):
    """Chain and discrete subspaces of the cubes at exponent 1..max_n."""
    for k in range(1, max_n + 1):
        verdicts = construct.verify_embeddings(k)
        for name, ok in verdicts.items():
            rep.record(ok, lambda: {"k": k, "embedding": name})


def _star_extension(rep, max_n, rng, samples):
    """Adding a top point makes any space vacuously normal."""
    for X in spaces_up_to(max_n):
        rep.record(props.is_vacuously_normal(construct.star_extension(X)).verdict, lambda: _sp(X=X))


def _canonical(rep, max_n, rng, samples):
    """Canonical form is invariant under relabeling."""
    for X in _labeled(max_n):
        perm = rng.sample(range(X.n), X.n)
        rep.record(is_homeomorphic(X, relabel(X, perm)), lambda: _sp(X=X))


SUITES = {
    "prop_3_1_product": _prop_3_1_product,
    "prop_3_1_vn_points": _prop_3_1_vn_points,
    "normal_fast_vs_bruteforce": _normal_fast,
    "prop_2_2_3_shrink_iff_normal": _prop_2_2_3,
    "thm_3_5_decomposition": _thm_3_5,
    "thm_3_5_b_product": _thm_3_5_b_product,
    "prop_3_2_product": _prop_3_2_product,
    "compact_projection_closed": _compact_projection,
    "prop_1_5_1_retraction": _prop_1_5_1,
    "prop_1_5_3_very_open": _prop_1_5_3,
    "obs_3_4": _obs_3_4,
    "t0_quotient": _t0_quotient,
    "obs_1_2_2": _obs_1_2_2,
    "star_extension_vn": _star_extension,
    "canonical_relabel": _canonical,
}


def run_suite(suite_id, max_n, samples=10_000, seed=0):
    try:
        body = SUITES[suite_id]
    except KeyError:
        raise UnknownSuite(suite_id) from None
    rep = SuiteReport(suite_id, max_n)
    start = time.perf_counter()
    body(rep, max_n, random.Random(seed), samples)
    rep.elapsed_ms = (time.perf_counter() - start) * 1000
    return rep


def describe(suite_id):
    try:
        return (SUITES[suite_id].__doc__ or "").strip().splitlines()[0]
    except KeyError:
        raise UnknownSuite(suite_id) from None
