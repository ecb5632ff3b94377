"""Enumerating small spaces and hunting for counterexamples."""

from finitop import count, find_counterexample
from finitop.search import count_topologies_by_families
from finitop.suites import SUITES, describe, run_suite

for n in range(1, 6):
    print(f"n={n}: {count(n):5} labeled, {count(n, up_to_iso=True):4} up to homeomorphism, "
          f"{count(n, t0_only=True, up_to_iso=True):4} T0")
print("family oracle agrees at n=4:", count_topologies_by_families(4) == count(4))

out = find_counterexample("!normal(X)", {"X": 3})
print("smallest non-normal space:", out.witness["X"], f"({out.visited} candidates)")

out = find_counterexample("normal(X) & normal(Y) & !normal(prod(X,Y))", {"X": 4, "Y": 4}, workers=4)
print("normal x normal non-normal up to 4 points:", out.verdict)

# finite vacuously normal spaces always have a maximum, so this finds nothing
out = find_counterexample("vacnormal(X) & !trivcompact(X)", {"X": 5})
print("vacuously normal without a maximum, up to 5 points:", out.verdict)

out = find_counterexample("!normal(X) & normal(t0q(star(X))) & !t0(X)", {"X": 4})
print("smallest non-normal, non-T0 space:", out.witness["X"])

for suite in ("prop_3_1_product", "thm_3_5_decomposition"):
    rep = run_suite(suite, 4)
    print(f"{suite}: {describe(suite)} -> {rep.verdict} ({rep.checked} checks)")
print(len(SUITES), "suites available")
