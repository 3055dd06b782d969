"""Dev loop 3: 27-dim spot check of bracket rules and straightening."""
import random, time

from yangian_sl3.scalars import Q
from yangian_sl3.linalg import mat_sub, mat_mul, mat_eq
from yangian_sl3.rtt import build_eval_rep, tensor_rep
from yangian_sl3.gauss import CurrentSystem
from yangian_sl3.modes import ModeAlgebra, NCPoly, rep_image, gen_image, WindowExhausted

alg = ModeAlgebra(window=4)
r27 = tensor_rep(tensor_rep(build_eval_rep(Q(3)), build_eval_rep(Q(11, 2))), build_eval_rep(Q(-4)))
cs = CurrentSystem(r27)

def comm(A, B):
    return mat_sub(mat_mul(A, B), mat_mul(B, A))

rng = random.Random(99)
fams_roots = [("e", 1), ("e", 2), ("e", 3), ("f", 1), ("f", 2), ("f", 3), ("h", 1), ("h", 2)]
t0 = time.time()
ok = we = 0
fails = []
for _ in range(60):
    fa, ra = rng.choice(fams_roots)
    fb, rb = rng.choice(fams_roots)
    ka, kb = rng.randint(-3, 3), rng.randint(-3, 3)
    a, b = (fa, ra, ka), (fb, rb, kb)
    try:
        br = alg.bracket(a, b)
    except WindowExhausted:
        we += 1
        continue
    lhs = comm(gen_image(a, cs), gen_image(b, cs))
    if mat_eq(lhs, rep_image(br, cs)):
        ok += 1
    else:
        fails.append((a, b))
print(f"27-dim pairs: {ok} ok, {we} WE, fails={fails}, {time.time()-t0:.1f}s")

# straightening rep-image agreement on 27-dim, constrained total degree
genpool = [(f, r, m) for f, r in fams_roots for m in range(0, 3)]
nfail = 0
t0 = time.time()
done = 0
while done < 30:
    L = rng.randint(2, 4)
    w = tuple(rng.choice(genpool) for _ in range(L))
    if sum(g[2] for g in w) > alg.window:
        continue
    done += 1
    p = NCPoly.word(w)
    nf = alg.straighten(p, "leftmost")
    if not mat_eq(rep_image(p, cs), rep_image(nf, cs)):
        nfail += 1
        print("  IMAGE FAIL:", w)
print(f"27-dim straighten: {30-nfail}/30 ok, {time.time()-t0:.1f}s")
