"""Open covers, refinements and shrinkings.

Covers are indexed lists of open sets; empty members and repetitions are
allowed.  A shrinking ``V`` of ``U`` has the same length, is itself an open
cover, and satisfies ``cl(V[i]) <= U[i]`` for every index.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .core import FinSpace, to_set
from .errors import IndexMismatch, NotACover, NotNormal


@dataclass(frozen=True)
class Cover:
    space: FinSpace
    members: tuple

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(frozenset(m) for m in self.members))
        for m in self.members:
            self.space._mask(m)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def masks(self):
        return [self.space._mask(m) for m in self.members]

    def is_valid(self):
        X = self.space
        union = 0
        for m in self.masks():
            if not X.is_open(m):
                return False
            union |= m
        return union == X.full_mask

    def to_dict(self):
        return {"members": [sorted(m) for m in self.members]}

    @classmethod
    def from_dict(cls, space, d):
        return cls(space, tuple(frozenset(m) for m in d["members"]))

    @classmethod
    def from_json(cls, space, text):
        return cls.from_dict(space, json.loads(text))


def _union(masks):
    u = 0
    for m in masks:
        u |= m
    return u


def is_refinement(V, O):
    if V.space != O.space:
        raise IndexMismatch("covers live on different spaces")
    vm, om = V.masks(), O.masks()
    if not all(V.space.is_open(m) for m in vm):
        return False
    if _union(vm) != _union(om):
        return False
    return all(any(v & ~o == 0 for o in om) for v in vm)


def is_shrinking(V, U):
    if V.space != U.space:
        raise IndexMismatch("covers live on different spaces")
    if len(V) != len(U):
        raise IndexMismatch(f"shrinking must be indexed like the cover ({len(V)} != {len(U)})")
    if not V.is_valid():
        return False
    X = V.space
    return all(X.up_mask(v) & ~u == 0 for v, u in zip(V.masks(), U.masks()))


def shrink(U):
    """Shrink a finite open cover member by member.

    A member whose closure already lies inside ``U[i]`` is kept.  Otherwise
    it is replaced by ``W = down(F)`` where ``F`` is the part of the space
    covered by no other current member.  ``cl(W)`` stays inside ``U[i]``
    exactly when ``down(F)`` misses ``down(X - U[i])``; otherwise the closed
    sets ``F`` and ``X - U[i]`` cannot be separated.
    """
    if not U.is_valid():
        raise NotACover("input is not an open cover")
    X = U.space
    full = X.full_mask
    current = U.masks()
    for i, target in enumerate(U.masks()):
        if X.up_mask(current[i]) & ~target == 0:
            continue
        others = _union(m for j, m in enumerate(current) if j != i)
        F = full & ~others
        C = full & ~target
        W = X.down_mask(F)
        if W & X.down_mask(C):
            raise NotNormal("cover has no shrinking; space is not normal", (to_set(F), to_set(C)))
        current[i] = W
    return Cover(X, tuple(to_set(m) for m in current))


def well_index(family):
    """Prefix unions: member ``b`` becomes the union of members ``0..b``."""
    out = []
    acc = frozenset()
    for S in family:
        acc = acc | frozenset(S)
        out.append(acc)
    return out


def _largest_open_inside(X, opens, target):
    # opens with closure inside target are closed under union, so the
    # union of all of them is the largest one
    return _union(o for o in opens if X.up_mask(o) & ~target == 0)


def has_shrinking_bruteforce(X, U_masks, opens=None):
    """Whether the cover ``U_masks`` admits any shrinking."""
    opens = X.open_masks() if opens is None else opens
    best = [_largest_open_inside(X, opens, u) for u in U_masks]
    return _union(best) == X.full_mask


def normal_via_shrinking(X):
    """Every 2-fold open cover shrinks (all ordered pairs of opens are tried)."""
    opens = X.open_masks()
    full = X.full_mask
    for a in opens:
        for b in opens:
            if a | b == full and not has_shrinking_bruteforce(X, (a, b), opens):
                return False
    return True
