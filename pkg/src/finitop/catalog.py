"""Fixed catalog of claims about the countable test spaces.

Each claim evaluates a handful of symbolic facts and cross-validates every
set it touches against the finite window model.  A claim's verdict is true
only when all of its checks hold and every window agrees.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .errors import UnknownClaim
from .symbolic import (NamedSpace, SymbolicSet, closure, cross_validate, equals, intersect,
                       is_closed, is_empty, is_open, is_subset, lid, member, open_envelope,
                       projection, separation_verdict, staircase)

N = NamedSpace
DEFAULT_WINDOWS = (8, 32, 128)


@dataclass
class ClaimResult:
    name: str
    statement: str
    checks: dict
    windows: dict
    details: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0

    @property
    def verdict(self):
        return all(self.checks.values()) and all(self.windows.values())

    def to_dict(self):
        return {"claim": self.name, "statement": self.statement, "verdict": self.verdict,
                "checks": dict(self.checks), "windows": {str(w): ok for w, ok in self.windows.items()},
                "details": self.details, "elapsed_ms": round(self.elapsed_ms, 3)}


def _windows_ok(sets, windows):
    out = {}
    for S in sets:
        for W, ok in cross_validate(S, windows).items():
            out[W] = out.get(W, True) and ok
    return out


def _staircase_claim(first):
    def run(windows):
        carrier = (first, N.UpperOmegaBar)
        F = staircase(carrier)
        # the staircase is built from the increasing cover U_m = [0, m) of the first factor
        cover_open = all(is_open(SymbolicSet.parse(first, f"x<={m - 1}")) for m in range(1, 5))
        checks = {"staircase_closed": is_closed(F)}
        details = {"staircase": F.to_dict(), "increasing_cover_open": cover_open,
                   "closure": closure(F).to_dict()}
        return checks, _windows_ok([F], windows), details
    return run


def _staircase_projection_not_closed(windows):
    # the staircase needs its first factor's tails [n, ω) closed, which holds in ↓ω
    # and fails in ↑ω; with the factors ↓ω and ↑ω̄ every listed property holds
    carrier = (N.LowerOmega, N.UpperOmegaBar)
    F = staircase(carrier)
    P = projection(F, 1)
    finite = SymbolicSet.parse(N.UpperOmegaBar, "x!=inf")
    literal = staircase((N.UpperOmega, N.LowerOmegaBar))
    checks = {
        "staircase_closed": is_closed(F),
        "projection_is_finite_part": equals(P, finite),
        "projection_not_closed": not is_closed(P),
    }
    details = {"carrier": [s.value for s in carrier], "projection": P.to_dict(),
               "projection_closure": closure(P).to_dict(),
               "staircase_closed_in_upper_omega_x_lower_omega_bar": is_closed(literal)}
    return checks, _windows_ok([F, P], windows), details


def _staircase_lid_inseparable(windows):
    carrier = (N.LowerOmega, N.OmegaBar)
    F, H = staircase(carrier), lid(carrier)
    env, env_open = open_envelope(F)
    finite = SymbolicSet.parse(carrier, "x!=inf, y!=inf")
    verdict = separation_verdict(F, H)
    checks = {
        "staircase_closed": is_closed(F),
        "lid_closed": is_closed(H),
        "envelope_is_omega_x_omega": equals(env, finite),
        "envelope_open": env_open,
        "not_separable": not verdict.separable,
    }
    details = {"envelope": env.to_dict(), "separation": verdict.to_dict()}
    return checks, _windows_ok([F, H, env], windows), details


def _lower_omega_closed_chain(windows, depth=12):
    X = N.LowerOmega
    tails = [SymbolicSet.parse(X, f"x>={n}") for n in range(depth)]
    checks = {
        # every nonempty closed set contains the closure of its least point, a tail
        "point_closures_are_tails": all(equals(closure(SymbolicSet.parse(X, f"x={n}")), tails[n])
                                        for n in range(depth)),
        "tails_closed": all(is_closed(T) for T in tails),
        "tails_pairwise_meet": all(not is_empty(intersect(a, b)) for a in tails for b in tails),
        "chain_decreasing": all(is_subset(tails[n + 1], tails[n]) for n in range(depth - 1)),
        "chain_members_nonempty": all(not is_empty(T) for T in tails),
        # p leaves the chain at stage p + 1, so the intersection is empty
        "chain_intersection_empty": all(not member(tails[p + 1], p) for p in range(depth - 1)),
    }
    sets = [SymbolicSet.parse(X, f"x={n}") for n in range(4)] + tails[:4]
    return checks, _windows_ok(sets, windows), {"depth": depth}


CLAIMS = {
    "staircase_lower_omega": ("staircase in ↓ω × ↑ω̄ is closed", _staircase_claim(N.LowerOmega)),
    "staircase_upper_omega": ("staircase in ↑ω × ↑ω̄ is closed", _staircase_claim(N.UpperOmega)),
    "staircase_discrete_omega": ("staircase in ω × ↑ω̄ is closed", _staircase_claim(N.DiscreteOmega)),
    "staircase_projection_not_closed": ("in ↓ω × ↑ω̄ the staircase is closed and its projection [0, ω) is not",
                      _staircase_projection_not_closed),
    "staircase_lid_inseparable": ("in ↓ω × ω̄ the staircase has envelope ω × ω and cannot be separated from the lid",
                    _staircase_lid_inseparable),
    "lower_omega_closed_chain": ("↓ω is vacuously normal and has a decreasing closed chain with empty intersection",
                       _lower_omega_closed_chain),
}


def verify_claim(name, windows=DEFAULT_WINDOWS):
    try:
        statement, run = CLAIMS[name]
    except KeyError:
        raise UnknownClaim(name) from None
    start = time.perf_counter()
    checks, wins, details = run(tuple(windows))
    return ClaimResult(name, statement, checks, wins, details, (time.perf_counter() - start) * 1000)


def verify_catalog(windows=DEFAULT_WINDOWS, names=None):
    return [verify_claim(n, windows) for n in (names or CLAIMS)]
