"""Retractions, very open maps, shrinkings and the normal T0 decomposition."""

from finitop import FinSpace, e_space, lambda_space, sierpinski, v_space
from finitop.construct import normal_t0_decomposition, sum_
from finitop.covers import Cover, shrink
from finitop.errors import NotNormal
from finitop.maps import PointMap, check_1_5_1, is_very_open, t0_quotient

X = sum_(sierpinski(), lambda_space())
dec = normal_t0_decomposition(X)
print("maximal points:", sorted(dec.z), " fibers:", [sorted(f) for f in dec.fibers])
print("retraction values:", dec.r.values)
print(check_1_5_1(dec.r).to_dict())

try:
    normal_t0_decomposition(v_space())
except NotNormal as e:
    print("V-space:", e, [sorted(w) for w in e.witness])

Q, q = t0_quotient(e_space())
print("T0 quotient of E has", Q.n, "points; quotient map very open:", is_very_open(q))

S = sierpinski()
print("shrink [{0}, X] on Sierpinski ->", [sorted(m) for m in shrink(Cover(S, [{0}, {0, 1}]))])
try:
    shrink(Cover(v_space(), [{0, 2}, {1, 2}]))
except NotNormal as e:
    print("no shrinking on the V-space:", [sorted(w) for w in e.witness])

const = PointMap(FinSpace.discrete(2), S, (0, 0))
print("constant map 2 -> Sierpinski at 0 is very open:", is_very_open(const))
