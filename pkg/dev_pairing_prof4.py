import cProfile
import pstats
import time

from yangian_sl3.modes import ModeAlgebra, NCPoly
from yangian_sl3.pairing import HopfPairing, _word_cap
from yangian_sl3.scalars import ZERO

alg = ModeAlgebra(window=4)
hp = HopfPairing(alg)

gx1 = ("e", 1, 0)
gx2 = ("h", 2, 1)
gy = ("e", 2, -2)


def one():
    prod = alg.straighten(NCPoly.word((gx1, gx2)))
    lhs = ZERO
    for w, c in prod.terms.items():
        lhs += c * hp._pair_words(w, (gy,))
    dy = hp.cop.of_gen(gy, length_cap=_word_cap((gx1, gx2)))
    rhs = ZERO
    for (l1, l2), c in dy.terms.items():
        rhs += c * hp._pair_words((gx2,), l1) * hp._pair_words((gx1,), l2)
    return lhs, rhs


pr = cProfile.Profile()
pr.enable()
t0 = time.time()
lhs, rhs = one()
dt = time.time() - t0
pr.disable()
print(f"triple: {dt:.2f}s lhs={lhs} rhs={rhs}")
stats = pstats.Stats(pr)
stats.sort_stats("cumulative").print_stats(22)
