"""Self-test suites run by ``kkr selftest``.

Each suite raises :class:`CheckFailure` carrying a minimal reproducer; the
``quick`` level runs the worked examples only, ``full`` adds the exhaustive
small-rank sweeps.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable, Iterator

from . import fixtures
from .boxball import BoxBallState, action_angle_report, evolve, evolve_trace, soliton_content
from .classical import classical_path_to_rc, classical_rc_to_path
from .crystal import (
    AffineElement,
    CrystalElement,
    affine_R,
    combinatorial_R,
    energy_H,
    format_word,
    is_highest,
    tensor_e,
    tensor_f,
)
from .rigged import enumerate_rcs, partitions
from .vertex import assign_modes, normal_order_chain, rc_to_path, rc_to_path_all, rc_to_path_trace


class CheckFailure(AssertionError):
    pass


def _expect(cond: bool, message: str) -> None:
    if not cond:
        raise CheckFailure(message)


def elements(n: int, l: int) -> list[CrystalElement]:
    """All of B_l at rank n."""
    return [CrystalElement.from_letters(c, n) for c in itertools.combinations_with_replacement(range(1, n + 2), l)]


def small_rcs(max_rank: int = 3, max_size: int = 6):
    for n in range(1, max_rank + 1):
        for size in range(1, max_size + 1):
            for lam in partitions(size):
                yield from enumerate_rcs(n, lam)


def highest_paths(n: int, lam) -> set:
    rows = [elements(n, l) for l in lam]
    return {w for w in itertools.product(*rows) if is_highest(w)}


# -- worked examples ----------------------------------------------------------

def check_worked_example() -> None:
    rc = fixtures.worked_rc()
    path, stages = rc_to_path_trace(rc)
    _expect(format_word(path) == fixtures.WORKED_PATH, f"rc2path gave {format_word(path)}")
    got = {st.a: (format_word(st.path), format_word(st.affine)) for st in stages}
    _expect(got[3] == ("4", "4:1"), f"stage 3: {got[3]}")
    _expect(got[2] == ("33*4", "3:1*34:3"), f"stage 2: {got[2]}")
    _expect(got[1][0] == "22*23*4*3", f"p(1) = {got[1][0]}")
    forms = normal_order_chain(
        assign_modes(rc.mu(1), rc.riggings(1), stages[-1].path, 1)
    )[-1]
    listed = {"2:1*3:2*22:3*34:3", "2:1*23:2*2:3*34:3", "2:1*23:2*24:3*3:3"}
    _expect({format_word(w) for w in forms} == listed, f"normal forms {[format_word(w) for w in forms]}")
    _expect(all(tuple(b.mode for b in w) == (1, 2, 3, 3) for w in forms), "C_1 modes differ from (1,2,3,3)")


def check_direct_scattering() -> None:
    rc = classical_path_to_rc(fixtures.thirteen_box_path())
    want = ((4, 3, 1), (0, 1, 4)), ((2, 1), (0, 0)), ((1,), (0,))
    _expect(rc.levels == want, f"got {rc.levels}")


def check_box_ball_table() -> None:
    rows = fixtures.BOX_BALL_TABLE
    for l in (4, 5, 10, 100):
        trace = evolve_trace(BoxBallState.parse(rows[0], 3), l, 7)
        for t, (state, row) in enumerate(zip(trace, rows)):
            _expect(state.render(len(row)) == row, f"carrier {l}, t={t}: {state.render(len(row))}")
            _expect(soliton_content(state) == (4, 3, 1), f"carrier {l}, t={t}: content {soliton_content(state)}")


def check_normal_ordering() -> None:
    s = fixtures.normal_order_example()
    chain = normal_order_chain(s)
    _expect(len(chain[0]) == 6, f"|S_3| = {len(chain[0])}")
    listed = {"3:5*1224:5*13:9", "1223:5*4:5*13:9"}
    _expect({format_word(w) for w in chain[1]} == listed, "S_2 differs")
    _expect({format_word(w) for w in chain[2]} == listed, "S_1 differs")


def check_action_angle() -> None:
    state = BoxBallState.parse(fixtures.BOX_BALL_TABLE[0], 3)
    for l in (1, 2, 10**6):
        rows = action_angle_report(state, l, 7, strict=False)
        bad = [r for r in rows if not r.ok]
        _expect(not bad, f"carrier {l}: {bad[0].note if bad else ''}")


# -- exhaustive sweeps ------------------------------------------------------------

def check_oracle_equivalence() -> None:
    for n in range(1, 4):
        for size in range(1, 7):
            for lam in partitions(size):
                images = set()
                for rc in enumerate_rcs(n, lam):
                    p = rc_to_path(rc)
                    q = classical_rc_to_path(rc)
                    _expect(p == q, f"engines differ on {rc.to_json()}: {format_word(p)} vs {format_word(q)}")
                    _expect(is_highest(p), f"not highest: {format_word(p)}")
                    _expect(classical_path_to_rc(p) == rc, f"round trip fails on {rc.to_json()}")
                    images.add(p)
                _expect(images == highest_paths(n, lam), f"n={n} lam={lam}: images do not exhaust P+")


def check_yang_baxter() -> None:
    modes = (3, -1, 7)
    for n in (1, 2):
        for l, m, k in itertools.product((1, 2), repeat=3):
            for x, y, z in itertools.product(elements(n, l), elements(n, m), elements(n, k)):
                w = (AffineElement(x, modes[0]), AffineElement(y, modes[1]), AffineElement(z, modes[2]))
                _expect(_r12(_r23(_r12(w))) == _r23(_r12(_r23(w))), f"Yang-Baxter fails on {format_word(w)}")


def _r12(w):
    return affine_R(w[0], w[1]) + (w[2],)


def _r23(w):
    return (w[0],) + affine_R(w[1], w[2])


def _pairs(max_rank=2, max_len=3) -> Iterator[tuple[CrystalElement, CrystalElement]]:
    for n in range(1, max_rank + 1):
        for l, m in itertools.product(range(1, max_len + 1), repeat=2):
            yield from itertools.product(elements(n, l), elements(n, m))


def check_r_inverse() -> None:
    for x, y in _pairs():
        yt, xt = combinatorial_R(x, y)
        _expect(combinatorial_R(yt, xt) == (x, y), f"R is not involutive on {x}*{y}")
        a, b = AffineElement(x, 2), AffineElement(y, 5)
        _expect(affine_R(*affine_R(a, b)) == (a, b), f"affine R is not involutive on {a}*{b}")


def check_r_morphism() -> None:
    for x, y in _pairs():
        image = combinatorial_R(x, y)
        for i in range(1, x.n + 1):
            for op in (tensor_e, tensor_f):
                before = op((x, y), i)
                after = op(image, i)
                mapped = None if before is None else combinatorial_R(*before)
                _expect(mapped == after, f"R does not commute with {op.__name__}_{i} on {x}*{y}")


def check_energy_bounds() -> None:
    for n in (1, 2):
        for l, m in itertools.product(range(1, 4), repeat=2):
            values = [energy_H(x, y) for x in elements(n, l) for y in elements(n, m)]
            _expect(max(values) == min(l, m), f"n={n} l={l} m={m}: max H = {max(values)}")
            _expect(min(values) == 0, f"n={n} l={l} m={m}: min H = {min(values)}")


def check_b0_independence() -> None:
    for rc in small_rcs():
        _, stages = rc_to_path_trace(rc)
        for st in stages:
            mu, J = rc.levels[st.a - 1]
            if not mu:
                continue
            ref = assign_modes(mu, J, st.path, st.a)
            for M in range(max(mu), max(mu) + 4):
                _expect(assign_modes(mu, J, st.path, st.a, M) == ref, f"M={M} changes modes on {rc.to_json()}")


def check_choice_independence(seed: int = 2005, sample: int = 50) -> None:
    pool = list(small_rcs())
    for rc in random.Random(seed).sample(pool, sample):
        paths = rc_to_path_all(rc)
        _expect(len(paths) == 1, f"{len(paths)} different paths from {rc.to_json()}")


def check_commuting_evolutions() -> None:
    state = BoxBallState.parse(fixtures.BOX_BALL_TABLE[0], 3)
    for l, m in itertools.combinations((1, 2, 3, 5), 2):
        a = evolve(evolve(state, l), m)
        b = evolve(evolve(state, m), l)
        _expect(a.same_as(b), f"T_{l} and T_{m} do not commute")


@dataclass(frozen=True)
class Suite:
    name: str
    level: str
    run: Callable[[], None]


SUITES = [
    Suite("worked-example", "quick", check_worked_example),
    Suite("direct-scattering", "quick", check_direct_scattering),
    Suite("box-ball-table", "quick", check_box_ball_table),
    Suite("normal-ordering", "quick", check_normal_ordering),
    Suite("action-angle", "quick", check_action_angle),
    Suite("commuting-evolutions", "quick", check_commuting_evolutions),
    Suite("oracle-equivalence", "full", check_oracle_equivalence),
    Suite("yang-baxter", "full", check_yang_baxter),
    Suite("r-inverse", "full", check_r_inverse),
    Suite("r-morphism", "full", check_r_morphism),
    Suite("energy-bounds", "full", check_energy_bounds),
    Suite("b0-independence", "full", check_b0_independence),
    Suite("choice-independence", "full", check_choice_independence),
]


def select(level: str = "quick", name_filter: str | None = None) -> list[Suite]:
    levels = {"quick": {"quick"}, "full": {"quick", "full"}}[level]
    chosen = [s for s in SUITES if s.level in levels]
    if name_filter:
        chosen = [s for s in SUITES if name_filter in s.name]
    return chosen


def run(suites, out) -> bool:
    ok = True
    for suite in suites:
        start = time.perf_counter()
        try:
            suite.run()
            status, detail = "PASS", ""
        except CheckFailure as exc:
            ok = False
            status, detail = "FAIL", f"  reproducer: {exc}"
        print(f"{status} {suite.name:<22} {time.perf_counter() - start:7.3f}s{detail}", file=out)
    return ok
