import time

from yangian_sl3.modes import ModeAlgebra, NCPoly
from yangian_sl3.pairing import (
    HopfPairing,
    _GEN_LETTERS,
    _degree3_modes,
    _degree3_modes_mirror,
    _word_cap,
)
from yangian_sl3.scalars import ZERO

alg = ModeAlgebra(window=4)
hp = HopfPairing(alg)

t0 = time.time()
n = 0
for fam, root in _GEN_LETTERS:
    for kx in range(0, 5):
        for famy, rooty in _GEN_LETTERS:
            for ky in range(-5, 0):
                gx = (fam, root, kx)
                gy = (famy, rooty, ky)
                hp.pair(NCPoly.gen(gx), NCPoly.gen(gy))
                n += 1
print(f"table {n} entries: {time.time()-t0:.1f}s")

t0 = time.time()
for wx, wy in [
    ((("e", 1, 1),), (("e", 2, -1), ("f", 3, -1))),
    ((("h", 1, 0), ("h", 1, 0)), (("h", 1, -1),)),
    ((("e", 1, 0), ("f", 1, 0)), (("h", 1, -1),)),
    ((("f", 1, 0), ("e", 1, 0)), (("h", 1, -1),)),
    ((("h", 1, 1),), (("f", 1, -1), ("e", 1, -1))),
    ((("h", 1, 1),), (("e", 1, -1), ("f", 1, -1))),
]:
    hp._pair_words(wx, wy)
print(f"word anchors: {time.time()-t0:.1f}s")

# right split triples, timed in slices
t0 = time.time()
triples = []
for fx, rx in _GEN_LETTERS:
    for f1, r1 in _GEN_LETTERS:
        for f2, r2 in _GEN_LETTERS:
            for kx, l1, l2 in _degree3_modes():
                triples.append(((fx, rx, kx), (f1, r1, l1), (f2, r2, l2)))
print(f"right-split triple count: {len(triples)}")
tslice = time.time()
from yangian_sl3.modes import WindowExhausted

swaps = 0
for i, (gx, gy1, gy2) in enumerate(triples):
    lhs = hp._pair_words((gx,), (gy1, gy2))
    dy = hp.cop.of_gen(gx)
    rhs = ZERO
    for (l1, l2), c in dy.terms.items():
        rhs += c * hp._pair_words(l1, (gy1,)) * hp._pair_words(l2, (gy2,))
    if lhs != rhs:
        print("MISMATCH", gx, gy1, gy2, lhs, rhs)
    try:
        br = alg.bracket(gy1, gy2)
    except WindowExhausted:
        br = None
    if br is not None:
        swapped = hp._pair_words((gx,), (gy2, gy1))
        for w, c in br.terms.items():
            swapped += c * (hp._pair_words((gx,), w) if w else 1)
        if swapped != lhs:
            print("SWAP MISMATCH", gx, gy1, gy2)
        swaps += 1
    if (i + 1) % 500 == 0:
        print(f"  {i+1}: {time.time()-tslice:.1f}s")
        tslice = time.time()
print(f"right-split total: {time.time()-t0:.1f}s")

t0 = time.time()
pairs = []
for f1, r1 in _GEN_LETTERS:
    for f2, r2 in _GEN_LETTERS:
        for fy, ry in _GEN_LETTERS:
            for k1, k2, l in _degree3_modes_mirror():
                pairs.append(((f1, r1, k1), (f2, r2, k2), (fy, ry, l)))
print(f"left-split triple count: {len(pairs)}")
tslice = time.time()
for i, (gx1, gx2, gy) in enumerate(pairs):
    if gy[0] == "h":
        continue
    prod = alg.straighten(NCPoly.word((gx1, gx2)))
    lhs = ZERO
    for w, c in prod.terms.items():
        lhs += c * hp._pair_words(w, (gy,))
    dy = hp.cop.of_gen(gy, length_cap=_word_cap((gx1, gx2)))
    rhs = ZERO
    for (l1, l2), c in dy.terms.items():
        rhs += c * hp._pair_words((gx2,), l1) * hp._pair_words((gx1,), l2)
    if lhs != rhs:
        print("MISMATCH", gx1, gx2, gy, lhs, rhs)
    if (i + 1) % 500 == 0:
        print(f"  {i+1}: {time.time()-tslice:.1f}s")
        tslice = time.time()
print(f"left-split total: {time.time()-t0:.1f}s")
