"""The staircase in products of countable spaces, decided exactly.

Sets are unions of difference-bound cells; every answer is also replayed on
finite windows of the spaces and compared with the finite engine.
"""

from finitop.symbolic import NamedSpace as N
from finitop.symbolic import (SymbolicSet, closure, cross_validate, equals, is_closed, lid, open_envelope,
                              projection, separation_verdict, staircase, window_oracle)

# The staircase {(m, k): k <= m} is closed in ↓ω × ↑ω̄, yet its shadow on ↑ω̄ is not.
carrier = (N.LowerOmega, N.UpperOmegaBar)
F = staircase(carrier)
P = projection(F, 1)
print("staircase:", F, " closed:", is_closed(F))
print("projection:", P, " closed:", is_closed(P), " closure:", closure(P))

# With ↑ω as the first factor the staircase picks up (a, k) for every a <= k.
G = staircase((N.UpperOmega, N.UpperOmegaBar))
print("in ↑ω × ↑ω̄ closed:", is_closed(G), " closure:", closure(G))

# In ↓ω × ω̄ the staircase and the lid are disjoint closed sets that cannot be separated.
carrier = (N.LowerOmega, N.OmegaBar)
F, H = staircase(carrier), lid(carrier)
env, is_open_env = open_envelope(F)
print("envelope of staircase:", env, " open:", is_open_env,
      " equals ω × ω:", equals(env, SymbolicSet.parse(carrier, "x!=inf, y!=inf")))
print("separation:", separation_verdict(F, H).to_dict())

# Window check: the same questions on {0..W} plus a lumped tail point.
print("window agreement:", cross_validate(F, (8, 32)))
print(window_oracle(SymbolicSet.parse(N.UpperOmega, "x=5"), 8).to_dict())
