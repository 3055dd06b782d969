"""Dev loop: verify mode bracket rules against rep images."""
import itertools, sys, time

from yangian_sl3.scalars import Q
from yangian_sl3.linalg import mat_sub, mat_is_zero, mat_mul, mat_eq
from yangian_sl3.rtt import build_eval_rep, tensor_rep
from yangian_sl3.gauss import CurrentSystem
from yangian_sl3.modes import ModeAlgebra, NCPoly, rep_image, gen_image, WindowExhausted

alg = ModeAlgebra(window=4)

def systems():
    r1 = build_eval_rep(Q(2))
    rt = tensor_rep(build_eval_rep(Q(3)), build_eval_rep(Q(11, 2)))
    return [CurrentSystem(r1), CurrentSystem(rt)]

SYS = systems()

def comm(A, B):
    return mat_sub(mat_mul(A, B), mat_mul(B, A))

def check_pair(a, b, label, failures):
    try:
        br = alg.bracket(a, b)
    except WindowExhausted:
        return "WE"
    for cs in SYS:
        lhs = comm(gen_image(a, cs), gen_image(b, cs))
        rhs = rep_image(br, cs)
        if not mat_eq(lhs, rhs):
            failures.append((label, a, b, cs.rep.label))
            return "FAIL"
    return "ok"

failures = []
t0 = time.time()

fams_roots = [("e", 1), ("e", 2), ("e", 3), ("f", 1), ("f", 2), ("f", 3), ("h", 1), ("h", 2)]
modes = range(-3, 4)

counts = {"ok": 0, "WE": 0, "FAIL": 0}
for (fa, ra), (fb, rb) in itertools.product(fams_roots, repeat=2):
    for ka in modes:
        for kb in modes:
            a = (fa, ra, ka)
            b = (fb, rb, kb)
            res = check_pair(a, b, f"{fa}{ra}[{ka}],{fb}{rb}[{kb}]", failures)
            counts[res] += 1

print("pair results:", counts, f"{time.time()-t0:.1f}s")
for f in failures[:25]:
    print("FAIL:", f)
sys.exit(1 if failures else 0)
