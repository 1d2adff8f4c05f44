"""The combinatorial Kerov-Kirillov-Reshetikhin bijection, box by box.

This module is the independent reference for :mod:`kkr.vertex`.  It works
one box at a time.  A row tableau ``x_1 <= ... <= x_s`` in ``B_s`` is read as
the single boxes ``x_s, ..., x_1`` (decreasing), so the rightmost box of a
path is the smallest letter of its last row.  Throughout, ``mu0`` is kept as
a composition whose last part is the row currently being taken apart or
built.

Removing the last box (``delta``):

0. If the last part ``s`` of ``mu0`` exceeds 1, split it into ``(s-1, 1)``.
   This changes only vacancy numbers, never riggings.
1. Set ``ell = 1``.  For ``a = 1, 2, ..., n`` look for singular strings in
   ``mu^(a)`` (rigging equal to the vacancy number of its length) of length
   at least ``ell``.  If there is none, stop: the removed letter is ``a``.
   Otherwise take the shortest one (lowest row index on ties), set ``ell``
   to its length and continue.  If every level supplied a string the letter
   is ``n + 1``.
2. Remove one box from every selected string and drop the trailing part 1
   of ``mu0``.
3. Recompute vacancy numbers.  Each shortened string gets the new vacancy
   number as its rigging (it is singular again); all other riggings stay.

Adding a box with letter ``r`` at the right end reverses this.  For
``a = r-1, ..., 1`` pick the longest singular string of ``mu^(a)`` whose
length does not exceed the length picked at level ``a+1`` (no bound at
``a = r-1``), judging singularity before the box is added; if none exists a
new string of length zero is used.  Append a part 1 to ``mu0``, add a box to
each picked string, recompute vacancy numbers and make the lengthened
strings singular.  When the box continues a row already being built, the
trailing 1 is then merged into the previous part.
"""

from __future__ import annotations

from typing import Sequence

from .crystal import CrystalElement, TensorWord, is_highest
from .rigged import RiggedConfiguration, validate


class NotHighestError(ValueError):
    pass


class _State:
    """Mutable working copy: ``mu0`` as a composition and ``[length, rigging]`` strings."""

    def __init__(self, n: int, mu0: Sequence[int], levels: Sequence[tuple[Sequence[int], Sequence[int]]]):
        self.n = n
        self.mu0 = list(mu0)
        self.strings = [[[j, r] for j, r in zip(mu, J)] for mu, J in levels]

    def E(self, a: int, j: int) -> int:
        if a == 0:
            return sum(min(j, x) for x in self.mu0)
        if a > self.n:
            return 0
        return sum(min(j, s[0]) for s in self.strings[a - 1])

    def vacancy(self, a: int, j: int) -> int:
        return self.E(a - 1, j) - 2 * self.E(a, j) + self.E(a + 1, j)

    def singular(self, a: int) -> list[int]:
        return [k for k, (j, r) in enumerate(self.strings[a - 1]) if r == self.vacancy(a, j)]

    def _resettle(self, touched: list[tuple[int, int]]) -> None:
        for a, k in touched:
            s = self.strings[a - 1][k]
            if s[0] > 0:
                s[1] = self.vacancy(a, s[0])
        for a in range(1, self.n + 1):
            self.strings[a - 1] = [s for s in self.strings[a - 1] if s[0] > 0]

    def remove_letter(self) -> int:
        if self.mu0[-1] > 1:
            self.mu0[-1] -= 1
            self.mu0.append(1)
        ell = 1
        picked = []
        letter = self.n + 1
        for a in range(1, self.n + 1):
            level = self.strings[a - 1]
            cands = [k for k in self.singular(a) if level[k][0] >= ell]
            if not cands:
                letter = a
                break
            k = min(cands, key=lambda k: (level[k][0], k))
            ell = level[k][0]
            picked.append((a, k))
        self.mu0.pop()
        for a, k in picked:
            self.strings[a - 1][k][0] -= 1
        self._resettle(picked)
        return letter

    def add_letter(self, r: int, new_row: bool) -> None:
        if not 1 <= r <= self.n + 1:
            raise ValueError(f"letter {r} outside 1..{self.n + 1}")
        bound = None
        picked = []
        for a in range(r - 1, 0, -1):
            level = self.strings[a - 1]
            cands = [k for k in self.singular(a) if bound is None or level[k][0] <= bound]
            if cands:
                k = min(cands, key=lambda k: (-level[k][0], k))
                bound = level[k][0]
            else:
                level.append([0, 0])
                k = len(level) - 1
                bound = 0
            picked.append((a, k))
        self.mu0.append(1)
        for a, k in picked:
            self.strings[a - 1][k][0] += 1
        self._resettle(picked)
        if not new_row:
            last = self.mu0.pop()
            self.mu0[-1] += last

    def levels(self) -> tuple:
        return tuple((tuple(s[0] for s in lv), tuple(s[1] for s in lv)) for lv in self.strings)


def classical_rc_to_path(rc: RiggedConfiguration) -> TensorWord:
    bad = validate(rc)
    if bad is not None:
        raise ValueError(f"invalid rigged configuration: {bad}")
    state = _State(rc.n, rc.mu0, rc.levels)
    letters = [state.remove_letter() for _ in range(sum(rc.mu0))]
    letters.reverse()
    out = []
    pos = 0
    for length in rc.mu0:
        group = letters[pos:pos + length]
        pos += length
        if any(x < y for x, y in zip(group, group[1:])):
            raise AssertionError(f"letters {group} do not form a row of B_{length}")
        out.append(CrystalElement.from_letters(group, rc.n))
    return tuple(out)


def classical_path_to_rc(p: Sequence[CrystalElement]) -> RiggedConfiguration:
    if not p:
        raise ValueError("empty path")
    if not is_highest(p):
        raise NotHighestError("path is not highest")
    n = p[0].n
    if p[0].restriction:
        raise ValueError("path must live in the unrestricted crystal")
    state = _State(n, (), [((), ())] * n)
    for b in p:
        for k, c in enumerate(reversed(b.letters())):
            state.add_letter(c, new_row=(k == 0))
    shape = tuple(b.length for b in p)
    levels = tuple(
        (tuple(j for j, _ in rows), tuple(r for _, r in rows))
        for rows in (sorted(zip(mu, J), key=lambda t: (-t[0], t[1])) for mu, J in state.levels())
    )
    is_partition = all(x >= y for x, y in zip(shape, shape[1:]))
    return RiggedConfiguration(n, shape, levels, composition=not is_partition)


def rigging_shift_check(p: Sequence[CrystalElement], l: int) -> bool:
    """Does one carrier pass of capacity ``l`` shift ``J^(1)_i`` by ``min(l, mu^(1)_i)`` and nothing else?

    ``p`` is a highest word of single boxes; trailing vacuum is added as needed.
    """
    from .boxball import BoxBallState, evolve

    state = BoxBallState.from_word(p)
    before = classical_path_to_rc(state.word())
    after = classical_path_to_rc(evolve(state, l).word())
    if [before.mu(a) for a in range(1, before.n + 1)] != [after.mu(a) for a in range(1, after.n + 1)]:
        return False
    if before.levels[1:] != after.levels[1:]:
        return False
    if not before.n:
        return True
    mu, J = before.levels[0]
    return tuple(r + min(l, j) for j, r in zip(mu, J)) == after.levels[0][1]
