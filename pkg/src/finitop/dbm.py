"""Difference-bound matrices over the naturals.

Node 0 is the constant zero.  ``m[i][j]`` is an upper bound on ``v_i - v_j``.
Integer bounds keep the closed matrix exact over the integers, so
satisfiability and projection onto a subset of variables need no further
rounding.
"""

from __future__ import annotations

import math

INF = math.inf


class DBM:
    __slots__ = ("k", "m")

    def __init__(self, k, m=None):
        self.k = k
        if m is None:
            m = [[0 if i == j else INF for j in range(k)] for i in range(k)]
            for v in range(1, k):
                m[0][v] = 0  # every variable is >= 0
        self.m = m

    def copy(self):
        return DBM(self.k, [row[:] for row in self.m])

    def add(self, i, j, c):
        """Constrain ``v_i - v_j <= c``."""
        if c < self.m[i][j]:
            self.m[i][j] = c

    def upper(self, v, c):
        self.add(v, 0, c)

    def lower(self, v, c):
        self.add(0, v, -c)

    def eq(self, i, j):
        self.add(i, j, 0)
        self.add(j, i, 0)

    def close(self):
        """Floyd-Warshall; returns False when the constraints are unsatisfiable."""
        m, k = self.m, self.k
        for t in range(k):
            mt = m[t]
            for i in range(k):
                mit = m[i][t]
                if mit == INF:
                    continue
                mi = m[i]
                for j in range(k):
                    c = mit + mt[j]
                    if c < mi[j]:
                        mi[j] = c
        return all(m[i][i] >= 0 for i in range(k))

    def project(self, keep):
        """Sub-matrix on the nodes ``keep`` (node 0 must be first); assumes closed."""
        return DBM(len(keep), [[self.m[i][j] for j in keep] for i in keep])

    def satisfied(self, values):
        """``values`` maps node index to a number (node 0 is implicitly 0)."""
        v = [0] + list(values)
        return all(v[i] - v[j] <= self.m[i][j] for i in range(self.k) for j in range(self.k))

    def key(self):
        return tuple(tuple(r) for r in self.m)

    def includes(self, other):
        """Both closed: every solution of ``other`` solves ``self``."""
        return all(a >= b for ra, rb in zip(self.m, other.m) for a, b in zip(ra, rb))

    def max_constant(self):
        c = 0
        for row in self.m:
            for x in row:
                if x != INF:
                    c = max(c, abs(int(x)))
        return c
