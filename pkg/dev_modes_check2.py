"""Dev loop 2: exhaustion pattern, straightening confluence, Serre, Jacobi."""
import itertools, random, sys, time

from yangian_sl3.scalars import Q
from yangian_sl3.linalg import mat_sub, mat_mul, mat_eq
from yangian_sl3.rtt import build_eval_rep, tensor_rep
from yangian_sl3.gauss import CurrentSystem
from yangian_sl3.modes import ModeAlgebra, NCPoly, rep_image, gen_image, WindowExhausted

alg = ModeAlgebra(window=4)

r1 = build_eval_rep(Q(2))
rt = tensor_rep(build_eval_rep(Q(3)), build_eval_rep(Q(11, 2)))
SYS = [CurrentSystem(r1), CurrentSystem(rt)]

# 1. exhaustion pattern: h negative vs nonneg must always exhaust
print("== exhaustion pattern ==")
bad = []
fams_roots = [("e", 1), ("e", 2), ("e", 3), ("f", 1), ("f", 2), ("f", 3), ("h", 1), ("h", 2)]
we_pairs = []
for (fa, ra), (fb, rb) in itertools.product(fams_roots, repeat=2):
    for ka in range(-3, 4):
        for kb in range(-3, 4):
            a, b = (fa, ra, ka), (fb, rb, kb)
            try:
                alg.bracket(a, b)
            except WindowExhausted:
                we_pairs.append((a, b))
# classify
from collections import Counter
cls = Counter()
for a, b in we_pairs:
    (fa, ra, ka), (fb, rb, kb) = a, b
    if fa == "h" and ka < 0 and (fb in "ef") and kb >= 0:
        cls["hneg-vs-nonneg"] += 1
    elif fb == "h" and kb < 0 and (fa in "ef") and ka >= 0:
        cls["nonneg-vs-hneg"] += 1
    else:
        cls["other"] += 1
        if cls["other"] <= 20:
            print("  other:", a, b)
print(cls)

# 2. straightening confluence on random words, plus rep image agreement
print("== confluence ==")
rng = random.Random(7)
genpool = []
for fam, root in fams_roots:
    for mode in range(0, 3):
        genpool.append((fam, root, mode))
t0 = time.time()
nfail = 0
for trial in range(200):
    L = rng.randint(2, 4)
    w = tuple(rng.choice(genpool) for _ in range(L))
    p = NCPoly.word(w)
    try:
        nf1 = alg.straighten(p, "leftmost")
        nf2 = alg.straighten(p, "rightmost")
    except WindowExhausted as exc:
        print("  WE on word", w, exc)
        nfail += 1
        continue
    if nf1 != nf2:
        print("  CONFLUENCE FAIL:", w)
        nfail += 1
        continue
    for cs in SYS:
        if not mat_eq(rep_image(p, cs), rep_image(nf1, cs)):
            print("  IMAGE FAIL:", w, cs.rep.label)
            nfail += 1
            break
    for word in nf1.terms:
        if not alg.is_normal(word):
            print("  NOT NORMAL:", w, word)
            nfail += 1
print(f"confluence: {200-nfail}/200 ok, {time.time()-t0:.1f}s")

# 3. Serre checks, modes {0,1}
print("== serre ==")
for fam in ("e", "f"):
    for k, l, m in itertools.product((0, 1), repeat=3):
        val = alg.serre_check((k, l, m), fam)
        status = "ok" if val.is_zero() else f"NONZERO {val}"
        if not val.is_zero():
            print(f"  serre {fam} {(k,l,m)}: {status}")
print("serre done")

# 4. Jacobi on random triples
print("== jacobi ==")
t0 = time.time()
nj = 0
rng2 = random.Random(13)
pool2 = []
for fam, root in fams_roots:
    for mode in range(-1, 3):
        pool2.append((fam, root, mode))
trials = 0
while trials < 50:
    a, b, c = (rng2.choice(pool2) for _ in range(3))
    try:
        val = alg.jacobi_check(a, b, c)
    except WindowExhausted:
        continue
    trials += 1
    if not val.is_zero():
        nj += 1
        print("  JACOBI FAIL:", a, b, c)
print(f"jacobi: {50-nj}/50 ok, {time.time()-t0:.1f}s")
sys.exit(0)
