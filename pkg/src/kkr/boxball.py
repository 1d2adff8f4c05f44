"""Box-ball soliton cellular automaton driven by the combinatorial R.

A state is a finite window of single boxes followed implicitly by letter-1
vacuum.  One time step ``T_l`` runs a carrier ``1^l`` from the left:
``u (x) b_j  ~  b'_j (x) u'`` for every site, and the ``b'_j`` form the new
state.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .classical import classical_path_to_rc
from .crystal import AffineTensorWord, CrystalElement, TensorWord, combinatorial_R, format_letter, parse_letters
from .rigged import RiggedConfiguration
from .vertex import intermediate_path, map_C, rc_to_path


@dataclass(frozen=True)
class BoxBallState:
    n: int
    window: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "window", tuple(int(c) for c in self.window))
        for c in self.window:
            if not 1 <= c <= self.n + 1:
                raise ValueError(f"letter {c} outside 1..{self.n + 1}")

    @classmethod
    def parse(cls, text: str, n: int) -> BoxBallState:
        return cls(n, tuple(parse_letters(text.strip().rstrip(".").rstrip())))

    @classmethod
    def from_word(cls, word: Sequence[CrystalElement]) -> BoxBallState:
        if not word:
            raise ValueError("empty word")
        if any(b.length != 1 for b in word):
            raise ValueError("box-ball states are words of single boxes")
        return cls(word[0].n, tuple(b.letters()[0] for b in word))

    def word(self) -> TensorWord:
        return tuple(CrystalElement(self.n, _unit(self.n, c)) for c in self.window)

    def trimmed(self) -> tuple[int, ...]:
        w = list(self.window)
        while w and w[-1] == 1:
            w.pop()
        return tuple(w)

    def same_as(self, other: BoxBallState) -> bool:
        """Equality up to trailing vacuum."""
        return self.n == other.n and self.trimmed() == other.trimmed()

    def render(self, width: int | None = None) -> str:
        w = list(self.window)
        if width is not None:
            w = (w + [1] * width)[:width]
        return "".join(format_letter(c) for c in w)

    def __str__(self) -> str:
        return self.render()


def _unit(n: int, c: int) -> tuple[int, ...]:
    m = [0] * (n + 1)
    m[c - 1] = 1
    return tuple(m)


def evolve(state: BoxBallState, l: int, margin: int | None = None) -> BoxBallState:
    """One step of ``T_l``.

    The window grows until the carrier has unloaded back to ``1^l``.  Trailing
    vacuum beyond ``margin`` (default ``2 l``) is trimmed, but the window never
    gets shorter than the input.
    """
    if l < 1:
        raise ValueError("carrier capacity must be at least 1")
    n = state.n
    vacuum = CrystalElement.row(1, l, n)
    one = CrystalElement(n, _unit(n, 1))
    carrier = vacuum
    out = []
    for c in state.window:
        b, carrier = combinatorial_R(carrier, CrystalElement(n, _unit(n, c)))
        out.append(b.letters()[0])
    while carrier != vacuum:
        b, carrier = combinatorial_R(carrier, one)
        out.append(b.letters()[0])
    if margin is None:
        margin = 2 * l
    last = max((k for k, c in enumerate(out) if c != 1), default=-1)
    keep = max(len(state.window), min(len(out), last + 1 + margin))
    out = (out + [1] * keep)[:keep]
    return BoxBallState(n, tuple(out))


def evolve_trace(state: BoxBallState, l: int, steps: int) -> list[BoxBallState]:
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    trace = [state]
    for _ in range(steps):
        trace.append(evolve(trace[-1], l))
    return trace


def to_rc(state: BoxBallState) -> RiggedConfiguration:
    if not state.window:
        return RiggedConfiguration.empty(state.n, ())
    return classical_path_to_rc(state.word())


def soliton_content(state: BoxBallState) -> tuple[int, ...]:
    """Amplitudes of the solitons, i.e. ``mu^(1)``."""
    if not state.window or state.n == 0:
        return ()
    return to_rc(state).mu(1)


def scattering_data(state: BoxBallState) -> AffineTensorWord:
    """``C_1(p^(1))``: soliton labels with modes encoding their positions."""
    rc = to_rc(state)
    if rc.n == 0 or not rc.mu(1):
        return ()
    return map_C(1, rc, intermediate_path(rc, 1))


def inverse_scattering(rc: RiggedConfiguration) -> BoxBallState:
    if any(x != 1 for x in rc.mu0):
        raise ValueError("box-ball states need mu0 = (1, ..., 1)")
    if not rc.mu0:
        return BoxBallState(rc.n, ())
    path = rc_to_path(rc)
    return BoxBallState.from_word(path)


@dataclass
class ActionAngleRow:
    t: int
    length: int
    levels: tuple
    ok: bool
    note: str = ""


class ActionAngleError(AssertionError):
    pass


def action_angle_report(state: BoxBallState, l: int, steps: int, strict: bool = True) -> list[ActionAngleRow]:
    """Rigged configuration of each state in the ``T_l`` trace.

    Checks that every ``mu^(a)`` stays fixed and that
    ``J^(1)_i(t) = J^(1)_i(0) + t min(l, mu^(1)_i)``.  With ``strict`` the
    first failure raises :class:`ActionAngleError`.
    """
    rows = []
    first = None
    for t, s in enumerate(evolve_trace(state, l, steps)):
        rc = to_rc(s)
        ok, note = True, ""
        if first is None:
            first = rc
        else:
            mus = [rc.mu(a) for a in range(1, rc.n + 1)]
            if mus != [first.mu(a) for a in range(1, first.n + 1)]:
                ok, note = False, f"configuration changed at step {t}"
            elif rc.n:
                mu, J0 = first.levels[0]
                expected = tuple(r + t * min(l, j) for j, r in zip(mu, J0))
                if rc.levels[0][1] != expected:
                    ok, note = False, f"step {t}: J(1) = {rc.levels[0][1]}, expected {expected}"
        rows.append(ActionAngleRow(t, len(s.window), rc.levels, ok, note))
        if strict and not ok:
            raise ActionAngleError(note)
    return rows
