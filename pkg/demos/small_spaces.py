"""Small spaces, their order and the properties read off from it."""

from finitop import FinSpace, lambda_space, props, sierpinski, v_space
from finitop.construct import divisor_space, product, star_extension, sum_

# A space is given by its open sets; the specialization order is what gets stored.
S = FinSpace.from_open_sets(2, [{0}])
print("Sierpinski:", S, "opens:", [sorted(U) for U in S.open_sets()])
print("cl{0} =", sorted(S.closure({0})), " int{1} =", sorted(S.interior({1})))

# Normality only needs the order: two points with a common lower bound need a common upper bound.
for name, X in [("V", v_space()), ("Lambda", lambda_space()), ("S+S", sum_(S, S))]:
    print(f"{name:7} normal={props.is_normal(X).verdict} vacuously normal={props.is_vacuously_normal(X).verdict}")

rep = props.is_normal(v_space())
print("V-space obstruction (disjoint closed sets):", [sorted(w) for w in rep.witness])

# Adding a top point makes anything vacuously normal.
print("star(V) vacuously normal:", props.is_vacuously_normal(star_extension(v_space())).verdict)

# Products of vacuously normal spaces stay vacuously normal; a discrete factor breaks it.
print("S x S vacuously normal:", props.is_vacuously_normal(product(S, S)).verdict)
print("S x 2 vacuously normal:", props.is_vacuously_normal(product(S, FinSpace.discrete(2))).verdict)

D = divisor_space(9)
print("divisor space on 2..9 vacuously normal:", props.is_vacuously_normal(D).verdict,
      " cl(4) =", sorted(p + 2 for p in D.closure({2})), " cl(9) =", sorted(p + 2 for p in D.closure({7})))
