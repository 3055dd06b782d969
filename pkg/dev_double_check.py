import time

from yangian_sl3.modes import ModeAlgebra, NCPoly, WindowExhausted
from yangian_sl3.double import DoubleCross
from yangian_sl3.gauss import CurrentSystem
from yangian_sl3.rtt import build_eval_rep, tensor_rep
from yangian_sl3.modes import rep_image
from yangian_sl3.linalg import mat_eq, mat_zeros
from yangian_sl3.scalars import Q

anchors = [
    (("e", 1, 0), ("f", 1, -1)),
    (("e", 1, 1), ("f", 1, -1)),
    (("e", 1, 0), ("f", 2, -1)),
    (("e", 2, 0), ("f", 2, -2)),
    (("e", 1, 0), ("e", 2, -1)),
    (("e", 1, 1), ("e", 2, -2)),
    (("e", 1, 0), ("e", 1, -1)),
    (("e", 2, 1), ("e", 1, -1)),
    (("e", 1, 1), ("e", 1, -2)),
    (("h", 1, 1), ("f", 1, -1)),
    (("h", 1, 0), ("e", 2, -1)),
    (("h", 2, 2), ("e", 1, -2)),
    (("h", 1, 1), ("f", 3, -1)),
    (("e", 1, 1), ("f", 3, -2)),
    (("e", 1, 2), ("f", 1, -2)),
    (("e", 2, 2), ("e", 1, -1)),
    (("h", 1, 1), ("h", 1, -1)),
    (("h", 1, 2), ("h", 2, -2)),
]

systems = [
    CurrentSystem(build_eval_rep(Q(2))),
    CurrentSystem(tensor_rep(build_eval_rep(Q(3)), build_eval_rep(Q(11, 2)))),
]


def flat(tp):
    p = NCPoly.zero()
    for (wm, wp), c in tp.terms.items():
        p = p + NCPoly.word(wm + wp, c)
    return p


for window in (4, 8):
    alg = ModeAlgebra(window=window)
    dc = DoubleCross(alg)
    t0 = time.time()
    bad = 0
    paths = {"canon": 0, "pbw": 0, "rep": 0}
    for ga, gb in anchors:
        raw = dc.cross_gen((ga,), gb)
        try:
            expect = NCPoly.word((gb, ga)) + alg.bracket(ga, gb)
        except WindowExhausted:
            diff = flat(raw) - NCPoly.word((ga, gb))
            ok = all(
                mat_eq(rep_image(diff, cs), mat_zeros(cs.rep.dim, cs.rep.dim))
                for cs in systems
            )
            paths["rep_direct"] = paths.get("rep_direct", 0) + 1
            if not ok:
                bad += 1
                print(f"w={window}: MISMATCH(direct) {ga} x {gb}")
            continue
        try:
            got = dc.canon(raw)
            exp = dc.canon(dc.solved_of_poly(expect))
            ok = got == exp
            paths["canon"] += 1
        except (WindowExhausted, ValueError):
            try:
                diff = alg.straighten(flat(raw) - expect)
                ok = diff.is_zero()
                paths["pbw"] += 1
            except WindowExhausted:
                diff = flat(raw) - expect
                ok = all(
                    mat_eq(rep_image(diff, cs), mat_zeros(cs.rep.dim, cs.rep.dim))
                    for cs in systems
                )
                paths["rep"] += 1
        if not ok:
            bad += 1
            print(f"w={window}: MISMATCH {ga} x {gb}")
    print(f"w={window}: {'ALL OK' if not bad else f'{bad} bad'} paths={paths} ({time.time()-t0:.2f}s)")
