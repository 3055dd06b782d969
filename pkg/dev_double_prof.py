from yangian_sl3.double import DoubleCross, flat_solved
from yangian_sl3.modes import ModeAlgebra

alg = ModeAlgebra(window=4)
dc = DoubleCross(alg)

for ga, gb in [
    (("e", 1, 0), ("f", 1, -1)),
    (("e", 1, 1), ("f", 1, -1)),
    (("e", 2, 0), ("f", 2, -2)),
    (("e", 1, 0), ("f", 2, -1)),
    (("e", 1, 0), ("e", 2, -1)),
]:
    print(f"{ga} x {gb}: {dict(sorted(flat_solved(dc.cross_gen((ga,), gb)).terms.items()))}")

rhs_check = flat_solved(dc.cross_gen((("e", 1, 1),), ("e", 2, -2)))
print("e11 x e2-2:", dict(sorted(rhs_check.terms.items())))
