"""Exhaustive enumeration of finite spaces and counterexample search.

Every preorder on ``n`` points arises from one on ``n - 1`` points by adding
a new point with a chosen down-set ``D`` of points below it and up-set ``U``
of points above it, subject to ``d <= u`` for all ``d in D``, ``u in U``.
Labeled enumeration extends every labeled space; enumeration up to
homeomorphism extends canonical representatives and deduplicates by
canonical form.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as iproduct

from . import dsl
from .core import FinSpace, bits, canonical_form
from .errors import BoundExceeded, UnboundVariable

MAX_N = 8


def _check_n(n, limit=MAX_N):
    if n < 1 or n > limit:
        raise BoundExceeded(f"n must be in 1..{limit}, got {n}")


def _extensions(X, t0_only):
    """All one-point extensions of ``X`` (new point has index ``X.n``)."""
    k = X.n
    full = X.full_mask
    downs = X.open_masks()
    ups = [full & ~d for d in downs]
    bit = 1 << k
    for D in downs:
        allowed = full
        for d in bits(D):
            allowed &= X.up[d]
        for U in ups:
            if U & ~allowed:
                continue
            if t0_only and D & U:
                continue
            up = [r | bit if D >> x & 1 else r for x, r in enumerate(X.up)]
            up.append(U | bit)
            yield FinSpace._trusted(k + 1, up)


def _labeled(n, t0_only):
    level = [FinSpace(0, [])]
    for _ in range(n):
        level = [Y for X in level for Y in _extensions(X, t0_only)]
    return level


@lru_cache(maxsize=None)
def _iso_reps(n, t0_only):
    if n == 0:
        return (FinSpace(0, []),)
    seen = {}
    for X in _iso_reps(n - 1, t0_only):
        for Y in _extensions(X, t0_only):
            C = canonical_form(Y)
            seen.setdefault(C.up, C)
    return tuple(seen[k] for k in sorted(seen))


@dataclass
class EnumerationStream:
    """Iterator over spaces on ``n`` points (labeled or one per class)."""

    n: int
    t0_only: bool = False
    up_to_iso: bool = False
    _items: list = field(default=None, repr=False)
    _cursor: int = 0

    def __post_init__(self):
        _check_n(self.n)

    def _load(self):
        if self._items is None:
            if self.up_to_iso:
                self._items = list(_iso_reps(self.n, self.t0_only))
            else:
                self._items = _labeled(self.n, self.t0_only)

    def __iter__(self):
        return self

    def __next__(self):
        self._load()
        if self._cursor >= len(self._items):
            raise StopIteration
        self._cursor += 1
        return self._items[self._cursor - 1]


def enumerate_spaces(n, t0_only=False, up_to_iso=False):
    return EnumerationStream(n, t0_only, up_to_iso)


def count(n, t0_only=False, up_to_iso=False):
    _check_n(n)
    if up_to_iso:
        return len(_iso_reps(n, t0_only))
    return len(_labeled(n, t0_only))


def spaces_up_to(max_n, t0_only=False, up_to_iso=True, min_n=1):
    out = []
    for n in range(min_n, max_n + 1):
        out.extend(enumerate_spaces(n, t0_only, up_to_iso))
    return out


def count_topologies_by_families(n):
    """Independent count: families of subsets closed under union and
    intersection that contain the empty set and the whole set."""
    full = (1 << n) - 1
    subsets = range(1 << n)
    total = 0
    # iterate over membership bitmaps of the power set
    for fam in range(1 << (1 << n)):
        if not (fam & 1 and fam >> full & 1):
            continue
        members = [s for s in subsets if fam >> s & 1]
        if all(fam >> (a | b) & 1 and fam >> (a & b) & 1 for a in members for b in members):
            total += 1
    return total


# -- counterexample search ----------------------------------------------------

@dataclass
class SearchOutcome:
    query: str
    bounds: dict
    verdict: str  # "counterexample" or "exhausted_none"
    witness: dict | None
    visited: int
    elapsed_ms: float

    @property
    def found(self):
        return self.verdict == "counterexample"

    def to_dict(self):
        d = {"query": self.query, "bounds": dict(self.bounds), "verdict": self.verdict,
             "visited": self.visited, "elapsed_ms": round(self.elapsed_ms, 3)}
        if self.witness is not None:
            d["witness"] = {k: v.to_dict() for k, v in self.witness.items()}
        return d


def candidate_tuples(names, bounds):
    """Assignments in search order: total size, then sizes, then canonical rows."""
    pools = [spaces_up_to(bounds[v]) for v in names]
    combos = list(iproduct(*pools))
    combos.sort(key=lambda c: (sum(X.n for X in c), tuple(X.n for X in c), tuple(X.up for X in c)))
    return combos


def _first_hit(query_text, names, combos, offset):
    ast = dsl.parse(query_text)
    for i, combo in enumerate(combos):
        if dsl.evaluate(ast, dict(zip(names, combo))):
            return offset + i
    return None


def find_counterexample(query, bounds, workers=1):
    """First assignment (in :func:`candidate_tuples` order) making ``query`` true."""
    start = time.perf_counter()
    text = query if isinstance(query, str) else dsl.pretty(query)
    ast = dsl.parse(text)
    names = sorted(dsl.free_vars(ast))
    for v in names:
        if v not in bounds:
            raise UnboundVariable(v)
    for v in names:
        _check_n(bounds[v])
    combos = candidate_tuples(names, bounds)
    if workers <= 1 or len(combos) < 2:
        hit = _first_hit(text, names, combos, 0)
    else:
        size = -(-len(combos) // workers)
        chunks = [(i, combos[i:i + size]) for i in range(0, len(combos), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_first_hit, text, names, chunk, off) for off, chunk in chunks]
            hits = [f.result() for f in futures]
        hits = [h for h in hits if h is not None]
        hit = min(hits) if hits else None
    elapsed = (time.perf_counter() - start) * 1000
    bounds = {v: bounds[v] for v in names}
    if hit is None:
        return SearchOutcome(text, bounds, "exhausted_none", None, len(combos), elapsed)
    witness = {v: canonical_form(X) for v, X in zip(names, combos[hit])}
    return SearchOutcome(text, bounds, "counterexample", witness, hit + 1, elapsed)
