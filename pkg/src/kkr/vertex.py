"""Rigged configuration -> highest path through normal ordering and carriers.

The path is grown level by level: ``p^(n)`` is the trivial ``(n+1)``-letter
word, ``C_a`` turns ``p^(a)`` into a normal-ordered affine word whose modes
come from the riggings, and ``Phi_a`` pushes that word through a vacuum of
letter-``a`` rows to produce ``p^(a-1)``.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .crystal import (
    AffineElement,
    AffineTensorWord,
    CrystalElement,
    TensorWord,
    affine_R,
    carry_left,
    carry_steps,
    energy_H,
)
from .rigged import RiggedConfiguration, validate

log = logging.getLogger(__name__)


class InvalidRiggedConfiguration(ValueError):
    pass


class NormalOrderError(ValueError):
    pass


# -- normal ordering ----------------------------------------------------------

def reorderings(s: Sequence[AffineElement]) -> list[AffineTensorWord]:
    """All R-reorderings of ``s`` that keep equal-length factors in their relative order."""
    start = tuple(s)
    seen = {start: None}
    queue = deque([start])
    while queue:
        word = queue.popleft()
        for k in range(len(word) - 1):
            # equal-length neighbours never pass each other
            if word[k].element.length == word[k + 1].element.length:
                continue
            left, right = affine_R(word[k], word[k + 1])
            nxt = word[:k] + (left, right) + word[k + 2:]
            if nxt not in seen:
                seen[nxt] = None
                queue.append(nxt)
    return list(seen)


def _modes(word: Sequence[AffineElement]) -> tuple[int, ...]:
    return tuple(b.mode for b in word)


def normal_order_chain(s: Sequence[AffineElement]) -> list[list[AffineTensorWord]]:
    """``[S_m, S_{m-1}, ..., S_1]``; ``S_{i-1}`` keeps the members of ``S_i`` with maximal i-th mode."""
    current = reorderings(s)
    chain = [current]
    for i in range(len(s), 1, -1):
        best = max(w[i - 1].mode for w in current)
        current = [w for w in current if w[i - 1].mode == best]
        chain.append(current)
    return chain


def normal_forms(s: Sequence[AffineElement]) -> list[AffineTensorWord]:
    if not s:
        return [()]
    return normal_order_chain(s)[-1]


def _canonical_key(word: AffineTensorWord):
    lengths = tuple(-b.element.length for b in word)
    letters = tuple(c for b in word for c in b.element.letters())
    return lengths, letters


def normal_order(s: Sequence[AffineElement]) -> tuple[AffineTensorWord, tuple[int, ...]]:
    """A canonical normal-ordered form of ``s`` and its (unique) mode sequence.

    Among the normal forms, the one whose factor lengths are lexicographically
    greatest wins; ties go to the least concatenated tableau word.
    """
    forms = normal_forms(s)
    best = min(forms, key=_canonical_key)
    return best, _modes(best)


# -- C_a ----------------------------------------------------------------------

def assign_modes(
    mu: Sequence[int],
    J: Sequence[int],
    b: Sequence[CrystalElement],
    a: int,
    M: int | None = None,
) -> AffineTensorWord:
    """Attach ``d_i = J_i + sum_{0<=k<i} H(b_k (x) b_i^(k+1))`` to each ``b_i``.

    ``b_0`` is the row ``(a+1)^M``; ``M`` defaults to ``max(mu)``.
    """
    if not (len(mu) == len(J) == len(b)):
        raise ValueError(f"length mismatch: |mu|={len(mu)}, |J|={len(J)}, |b|={len(b)}")
    if not b:
        return ()
    for bi, m in zip(b, mu):
        if bi.length != m:
            raise ValueError(f"factor {bi} does not have length {m}")
        if bi.restriction != a:
            raise ValueError(f"factor {bi} is not restricted to letters >= {a + 1}")
    if M is None:
        M = max(mu)
    elif M < max(mu):
        raise ValueError(f"M={M} is smaller than max(mu)={max(mu)}")
    b0 = CrystalElement.row(a + 1, M, b[0].n, a)
    out = []
    for i, bi in enumerate(b):
        d = J[i] + sum(h for _, _, h in carry_steps(b[:i], bi))
        front, _ = carry_left(b[:i], bi)
        d += energy_H(b0, front)
        out.append(AffineElement(bi, d))
    return tuple(out)


def map_C_all(a: int, rc: RiggedConfiguration, p: Sequence[CrystalElement]) -> list[AffineTensorWord]:
    mu, J = rc.levels[a - 1]
    _check_shape(p, mu)
    return normal_forms(assign_modes(mu, J, p, a))


def map_C(a: int, rc: RiggedConfiguration, p: Sequence[CrystalElement]) -> AffineTensorWord:
    mu, J = rc.levels[a - 1]
    _check_shape(p, mu)
    return normal_order(assign_modes(mu, J, p, a))[0]


def _check_shape(p: Sequence[CrystalElement], mu: Sequence[int]) -> None:
    if tuple(b.length for b in p) != tuple(mu):
        raise ValueError(f"path shape {tuple(b.length for b in p)} does not match {tuple(mu)}")


# -- Phi_a ----------------------------------------------------------------------

def map_Phi(a: int, s: Sequence[AffineElement], lam: Sequence[int], n: int) -> TensorWord:
    """Carry ``T^{d_1} b_1 T^{d_2-d_1} ... b_m`` through ``a^{lam_1} ... a^{lam_k}``.

    Returns ``c_1 (x) ... (x) c_k`` in the crystal restricted to letters >= a.
    """
    modes = _modes(s)
    if modes and modes[0] < 0:
        raise NormalOrderError(f"first mode {modes[0]} is negative")
    if any(x > y for x, y in zip(modes, modes[1:])):
        raise NormalOrderError(f"modes {modes} are not weakly increasing")
    box = CrystalElement.row(a, 1, n, a - 1)
    word: list[CrystalElement] = []
    prev = 0
    for b in s:
        word.extend([box] * (b.mode - prev))
        word.append(b.element.embed(a - 1))
        prev = b.mode
    carrier = tuple(word)
    out = []
    for length in lam:
        c, carrier = carry_left(carrier, CrystalElement.row(a, length, n, a - 1))
        out.append(c)
    if any(x.mult[a - 1] != x.length for x in carrier):
        log.warning("Phi_%d: tail %s is not made of letter-%d rows", a, "*".join(map(str, carrier)), a)
    return tuple(out)


# -- the composite map ----------------------------------------------------------

def _seed(rc: RiggedConfiguration) -> TensorWord:
    n = rc.n
    return tuple(CrystalElement.row(n + 1, m, n, n) for m in rc.mu(n))


@dataclass(frozen=True)
class Stage:
    """``p^(a)`` together with the chosen ``C_a(p^(a))``."""

    a: int
    path: TensorWord
    affine: AffineTensorWord


def rc_to_path_trace(rc: RiggedConfiguration) -> tuple[TensorWord, list[Stage]]:
    bad = validate(rc)
    if bad is not None:
        raise InvalidRiggedConfiguration(f"invalid rigged configuration: {bad}")
    p = _seed(rc)
    stages = []
    for a in range(rc.n, 0, -1):
        s = map_C(a, rc, p)
        stages.append(Stage(a, p, s))
        p = map_Phi(a, s, rc.mu(a - 1), rc.n)
    return p, stages


def rc_to_path(rc: RiggedConfiguration) -> TensorWord:
    return rc_to_path_trace(rc)[0]


def intermediate_path(rc: RiggedConfiguration, a: int) -> TensorWord:
    """``p^(a)``: the stage-``a`` word over letters >= a+1 (``a=0`` is the full path)."""
    if not 0 <= a <= rc.n:
        raise ValueError(f"level {a} outside 0..{rc.n}")
    if a == rc.n:
        if validate(rc) is not None:
            raise InvalidRiggedConfiguration(f"invalid rigged configuration: {validate(rc)}")
        return _seed(rc)
    path, stages = rc_to_path_trace(rc)
    if a == 0:
        return path
    return next(st.path for st in stages if st.a == a)


def rc_to_path_all(rc: RiggedConfiguration) -> set[TensorWord]:
    """Final paths over every choice of normal-ordered form at every level."""
    bad = validate(rc)
    if bad is not None:
        raise InvalidRiggedConfiguration(f"invalid rigged configuration: {bad}")
    frontier = {_seed(rc)}
    for a in range(rc.n, 0, -1):
        nxt = set()
        for p in frontier:
            for s in map_C_all(a, rc, p):
                nxt.add(map_Phi(a, s, rc.mu(a - 1), rc.n))
        frontier = nxt
    return frontier
