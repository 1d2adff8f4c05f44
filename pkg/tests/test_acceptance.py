"""The eight acceptance criteria, each with its time bound."""

import itertools
import random
import time
from contextlib import contextmanager

from kkr import fixtures
from kkr.boxball import BoxBallState, action_angle_report, evolve_trace, soliton_content
from kkr.classical import classical_path_to_rc, classical_rc_to_path
from kkr.crystal import AffineElement, affine_R, combinatorial_R, energy_H, format_word, is_highest, tensor_e, tensor_f
from kkr.rigged import enumerate_rcs, partitions
from kkr.selftest import elements, highest_paths
from kkr.vertex import assign_modes, map_C_all, normal_order_chain, rc_to_path, rc_to_path_all, rc_to_path_trace


@contextmanager
def timed(criterion, number, title, bound):
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < bound, f"took {elapsed:.2f}s, bound {bound}s"
        status = "PASS"
    finally:
        criterion(number, title, status, time.perf_counter() - start)


def words(ws):
    return {format_word(w) for w in ws}


def test_1_worked_example(criterion):
    with timed(criterion, 1, "worked rigged configuration -> 111*22*3*1*4*2*3 with trace", 1.0):
        rc = fixtures.worked_rc()
        path, stages = rc_to_path_trace(rc)
        assert format_word(path) == "111*22*3*1*4*2*3"
        s3, s2, s1 = stages
        assert (format_word(s3.path), format_word(s3.affine)) == ("4", "4:1")
        assert (format_word(s2.path), format_word(s2.affine)) == ("33*4", "3:1*34:3")
        assert format_word(s1.path) == "22*23*4*3"
        forms = map_C_all(1, rc, s1.path)
        assert len(forms) == 3
        assert words(forms) == {"2:1*3:2*22:3*34:3", "2:1*23:2*2:3*34:3", "2:1*23:2*24:3*3:3"}
        assert {tuple(b.mode for b in w) for w in forms} == {(1, 2, 3, 3)}


def test_2_direct_scattering(criterion):
    with timed(criterion, 2, "thirteen-box word -> (4,3,1)/(0,1,4), (2,1)/(0,0), (1)/(0)", 1.0):
        rc = classical_path_to_rc(fixtures.thirteen_box_path())
        assert rc.levels == (((4, 3, 1), (0, 1, 4)), ((2, 1), (0, 0)), ((1,), (0,)))


def test_3_box_ball_table(criterion):
    with timed(criterion, 3, "eight box-ball rows for carriers 4, 5, 10, 100", 1.0):
        table = fixtures.BOX_BALL_TABLE
        for l in (4, 5, 10, 100):
            trace = evolve_trace(BoxBallState.parse(table[0], 3), l, 7)
            assert [s.render(len(table[0])) for s in trace] == table
            assert all(soliton_content(s) == (4, 3, 1) for s in trace)


def test_4_normal_ordering(criterion):
    with timed(criterion, 4, "|S_3| = 6, S_2 = S_1 = two forms with modes (5,5,9)", 1.0):
        chain = normal_order_chain(fixtures.normal_order_example())
        assert len(chain[0]) == 6
        listed = {"3:5*1224:5*13:9", "1223:5*4:5*13:9"}
        assert words(chain[1]) == listed
        assert words(chain[2]) == listed
        assert {tuple(b.mode for b in w) for w in chain[2]} == {(5, 5, 9)}


def test_5_oracle_equivalence(criterion):
    with timed(criterion, 5, "vertex = classical on every RC with n <= 3, |mu0| <= 6", 60.0):
        total = 0
        for n in range(1, 4):
            for size in range(1, 7):
                for lam in partitions(size):
                    images = set()
                    for rc in enumerate_rcs(n, lam):
                        p = rc_to_path(rc)
                        assert p == classical_rc_to_path(rc), rc.to_json()
                        assert is_highest(p), rc.to_json()
                        assert classical_path_to_rc(p) == rc, rc.to_json()
                        images.add(p)
                        total += 1
                    assert images == highest_paths(n, lam), (n, lam)
        assert total == 628


def _yang_baxter():
    modes = (3, -1, 7)

    def r12(w):
        return affine_R(w[0], w[1]) + (w[2],)

    def r23(w):
        return (w[0],) + affine_R(w[1], w[2])

    for n in (1, 2):
        for l, m, k in itertools.product((1, 2), repeat=3):
            for x, y, z in itertools.product(elements(n, l), elements(n, m), elements(n, k)):
                w = tuple(AffineElement(e, d) for e, d in zip((x, y, z), modes))
                assert r12(r23(r12(w))) == r23(r12(r23(w))), format_word(w)


def _pair_properties():
    for n in (1, 2):
        for l, m in itertools.product(range(1, 4), repeat=2):
            hs = []
            for x, y in itertools.product(elements(n, l), elements(n, m)):
                yt, xt = combinatorial_R(x, y)
                assert combinatorial_R(yt, xt) == (x, y)
                a, b = AffineElement(x, 2), AffineElement(y, 5)
                assert affine_R(*affine_R(a, b)) == (a, b)
                for i in range(1, n + 1):
                    for op in (tensor_e, tensor_f):
                        before = op((x, y), i)
                        assert (None if before is None else combinatorial_R(*before)) == op((yt, xt), i)
                hs.append(energy_H(x, y))
            assert max(hs) == min(l, m) and min(hs) == 0


def _b0_independence():
    for n in range(1, 4):
        for size in range(1, 7):
            for lam in partitions(size):
                for rc in enumerate_rcs(n, lam):
                    _, stages = rc_to_path_trace(rc)
                    for st in stages:
                        mu, J = rc.levels[st.a - 1]
                        if not mu:
                            continue
                        ref = assign_modes(mu, J, st.path, st.a)
                        for M in range(max(mu) + 1, max(mu) + 4):
                            assert assign_modes(mu, J, st.path, st.a, M) == ref, (M, rc.to_json())


def test_6_property_suites(criterion):
    with timed(criterion, 6, "Yang-Baxter, R inverse, R vs Kashiwara, H bounds, b_0 independence", 60.0):
        _yang_baxter()
        _pair_properties()
        _b0_independence()


def test_7_action_angle(criterion):
    with timed(criterion, 7, "mu fixed and J(1) flows by t*min(l, mu) for l in 1, 2, 10^6", 5.0):
        state = BoxBallState.parse(fixtures.BOX_BALL_TABLE[0], 3)
        for l in (1, 2, 10**6):
            rows = action_angle_report(state, l, 7, strict=False)
            assert len(rows) == 8
            assert all(r.ok for r in rows), [r.note for r in rows if not r.ok]
            mus = {tuple(mu for mu, _ in r.levels) for r in rows}
            assert mus == {((4, 3, 1), (2, 1), (1,))}
            (mu, J0), = [rows[0].levels[0]]
            for r in rows:
                diff = tuple(j - j0 for j, j0 in zip(r.levels[0][1], J0))
                assert diff == tuple(r.t * min(l, m) for m in mu)


def test_8_choice_independence(criterion):
    with timed(criterion, 8, "all normal-form branches agree on 50 seeded RCs", 120.0):
        pool = [rc for n in range(1, 4) for size in range(1, 7) for lam in partitions(size) for rc in enumerate_rcs(n, lam)]
        sample = random.Random(2005).sample(pool, 50)
        for rc in sample:
            paths = rc_to_path_all(rc)
            assert paths == {rc_to_path(rc)}, rc.to_json()
