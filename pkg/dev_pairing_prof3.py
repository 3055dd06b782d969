import time

from yangian_sl3.modes import ModeAlgebra, NCPoly
from yangian_sl3.pairing import (
    HopfPairing,
    _GEN_LETTERS,
    _degree3_modes_mirror,
    _word_cap,
)
from yangian_sl3.scalars import ZERO

alg = ModeAlgebra(window=4)
hp = HopfPairing(alg)

t0 = time.time()
count = 0
for f1, r1 in _GEN_LETTERS:
    for f2, r2 in _GEN_LETTERS:
        for fy, ry in _GEN_LETTERS:
            if fy == "h":
                continue
            for k1, k2, l in _degree3_modes_mirror():
                gx1, gx2, gy = (f1, r1, k1), (f2, r2, k2), (fy, ry, l)
                t1 = time.time()
                prod = alg.straighten(NCPoly.word((gx1, gx2)))
                lhs = ZERO
                for w, c in prod.terms.items():
                    lhs += c * hp._pair_words(w, (gy,))
                dy = hp.cop.of_gen(gy, length_cap=(k2 + 1, k1 + 1))
                rhs = ZERO
                for (l1, l2), c in dy.terms.items():
                    rhs += c * hp._pair_words((gx2,), l1) * hp._pair_words((gx1,), l2)
                if lhs != rhs:
                    print("MISMATCH", gx1, gx2, gy, lhs, rhs)
                dt = time.time() - t1
                if dt > 1.0:
                    print(f"SLOW {dt:.1f}s {gx1} {gx2} {gy}")
                count += 1
                if count % 1000 == 0:
                    print(f"  {count}: {time.time()-t0:.1f}s total")
print(f"left-split {count}: {time.time()-t0:.1f}s")
