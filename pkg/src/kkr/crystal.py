"""One-row crystals B_l of type A^(1)_n and the combinatorial R.

An element of B_l is stored as its letter-multiplicity vector
``(x_1, ..., x_{n+1})`` with ``sum(x) == l``.  Tensor words are plain tuples
of elements; affine elements carry an integer mode.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

TensorWord = tuple["CrystalElement", ...]
AffineTensorWord = tuple["AffineElement", ...]


def format_letter(letter: int) -> str:
    return str(letter) if letter < 10 else f"({letter})"


_TOKEN = re.compile(r"\((\d+)\)|(\d)")


def parse_letters(text: str) -> list[int]:
    """Split ``"12(11)3"`` into ``[1, 2, 11, 3]``."""
    letters = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ValueError(f"bad letter at position {pos} in {text!r}")
        letters.append(int(m.group(1) or m.group(2)))
        pos = m.end()
    return letters


@dataclass(frozen=True)
class CrystalElement:
    """A row tableau in B_l (restricted to letters > ``restriction``)."""

    n: int
    mult: tuple[int, ...]
    restriction: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("rank must be nonnegative")
        if len(self.mult) != self.n + 1:
            raise ValueError(f"multiplicity vector must have {self.n + 1} entries, got {self.mult}")
        if any(x < 0 for x in self.mult):
            raise ValueError(f"negative multiplicity in {self.mult}")
        if sum(self.mult) < 1:
            raise ValueError("element must have at least one box")
        if not 0 <= self.restriction <= self.n:
            raise ValueError(f"restriction {self.restriction} outside 0..{self.n}")
        if any(self.mult[: self.restriction]):
            raise ValueError(f"{self.mult} uses letters <= {self.restriction}")

    @classmethod
    def from_letters(cls, letters: Iterable[int], n: int, restriction: int = 0) -> CrystalElement:
        mult = [0] * (n + 1)
        for c in letters:
            if not 1 <= c <= n + 1:
                raise ValueError(f"letter {c} outside 1..{n + 1}")
            mult[c - 1] += 1
        return cls(n, tuple(mult), restriction)

    @classmethod
    def parse(cls, text: str, n: int, restriction: int = 0) -> CrystalElement:
        """Parse a tableau word (``"1224"``) or a multiplicity vector (``"[1,2,0,1]"``)."""
        text = text.strip()
        if text.startswith("["):
            body = text.strip("[]")
            mult = tuple(int(t) for t in body.split(",")) if body.strip() else ()
            return cls(n, mult, restriction)
        return cls.from_letters(parse_letters(text), n, restriction)

    @classmethod
    def row(cls, letter: int, length: int, n: int, restriction: int = 0) -> CrystalElement:
        """The tableau ``letter^length``."""
        if not 1 <= letter <= n + 1:
            raise ValueError(f"letter {letter} outside 1..{n + 1}")
        mult = [0] * (n + 1)
        mult[letter - 1] = length
        return cls(n, tuple(mult), restriction)

    @property
    def length(self) -> int:
        return sum(self.mult)

    def letters(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, x in enumerate(self.mult) for _ in range(x))

    def embed(self, restriction: int) -> CrystalElement:
        """View the element inside a (weakly) larger restricted crystal."""
        return CrystalElement(self.n, self.mult, restriction)

    def __str__(self) -> str:
        return "".join(format_letter(c) for c in self.letters())


@dataclass(frozen=True)
class AffineElement:
    element: CrystalElement
    mode: int

    @classmethod
    def parse(cls, text: str, n: int, restriction: int = 0) -> AffineElement:
        word, _, mode = text.partition(":")
        return cls(CrystalElement.parse(word, n, restriction), int(mode) if mode else 0)

    def __str__(self) -> str:
        return f"{self.element}:{self.mode}"


# -- text I/O for words -----------------------------------------------------

def parse_word(text: str, n: int, restriction: int = 0) -> TensorWord:
    text = text.strip()
    if not text:
        return ()
    return tuple(CrystalElement.parse(t, n, restriction) for t in text.split("*"))


def parse_affine_word(text: str, n: int, restriction: int = 0) -> AffineTensorWord:
    text = text.strip()
    if not text:
        return ()
    return tuple(AffineElement.parse(t, n, restriction) for t in text.split("*"))


def format_word(word: Sequence[CrystalElement | AffineElement]) -> str:
    return "*".join(str(b) for b in word)


def weight(x: CrystalElement | Sequence[CrystalElement]) -> tuple[int, ...]:
    """Classical weight: the multiplicity vector, summed over tensor factors."""
    if isinstance(x, CrystalElement):
        return x.mult
    if not x:
        raise ValueError("weight of an empty word needs a rank")
    return tuple(sum(col) for col in zip(*(b.mult for b in x)))


# -- Kashiwara operators ------------------------------------------------------

def _check_index(n: int, i: int) -> None:
    if not 1 <= i <= n:
        raise ValueError(f"Kashiwara index {i} outside 1..{n}")


def _shift(x: CrystalElement, i: int, sign: int) -> CrystalElement | None:
    mult = list(x.mult)
    mult[i - 1] += sign
    mult[i] -= sign
    if min(mult) < 0 or any(mult[: x.restriction]):
        return None
    return CrystalElement(x.n, tuple(mult), x.restriction)


def kashiwara_e(x: CrystalElement, i: int) -> CrystalElement | None:
    """Raise one letter ``i+1`` to ``i``; ``None`` if impossible."""
    _check_index(x.n, i)
    return _shift(x, i, +1)


def kashiwara_f(x: CrystalElement, i: int) -> CrystalElement | None:
    _check_index(x.n, i)
    return _shift(x, i, -1)


def epsilon(x: CrystalElement, i: int) -> int:
    return x.mult[i]


def phi(x: CrystalElement, i: int) -> int:
    return x.mult[i - 1]


def _reduced_signature(word: Sequence[CrystalElement], i: int) -> tuple[list[int], list[int]]:
    # Each factor contributes -^eps +^phi; a '-' cancels the nearest unmatched '+' to its left.
    minus: list[int] = []
    plus: list[int] = []
    open_plus: list[int] = []
    for k, b in enumerate(word):
        m = epsilon(b, i)
        while m and open_plus:
            j = open_plus[-1]
            c = min(m, plus[j])
            plus[j] -= c
            m -= c
            if plus[j] == 0:
                open_plus.pop()
        minus.append(m)
        p = phi(b, i)
        plus.append(p)
        if p:
            open_plus.append(k)
    return minus, plus


def _check_word(word: Sequence[CrystalElement]) -> None:
    if not word:
        raise ValueError("empty tensor word")
    n, r = word[0].n, word[0].restriction
    for b in word:
        if b.n != n:
            raise ValueError("tensor factors have different ranks")
        if b.restriction != r:
            raise ValueError("tensor factors have different restrictions")


def tensor_e(word: Sequence[CrystalElement], i: int) -> TensorWord | None:
    _check_word(word)
    _check_index(word[0].n, i)
    minus, _ = _reduced_signature(word, i)
    hits = [k for k, m in enumerate(minus) if m]
    if not hits:
        return None
    k = hits[-1]
    b = kashiwara_e(word[k], i)
    if b is None:
        return None
    return tuple(word[:k]) + (b,) + tuple(word[k + 1:])


def tensor_f(word: Sequence[CrystalElement], i: int) -> TensorWord | None:
    _check_word(word)
    _check_index(word[0].n, i)
    _, plus = _reduced_signature(word, i)
    hits = [k for k, p in enumerate(plus) if p]
    if not hits:
        return None
    k = hits[0]
    b = kashiwara_f(word[k], i)
    if b is None:
        return None
    return tuple(word[:k]) + (b,) + tuple(word[k + 1:])


def is_highest(word: Sequence[CrystalElement]) -> bool:
    """True iff every classical raising operator above the restriction kills ``word``."""
    if not word:
        return True
    _check_word(word)
    n, r = word[0].n, word[0].restriction
    return all(not any(_reduced_signature(word, i)[0]) for i in range(r + 1, n + 1))


# -- combinatorial R and energy ----------------------------------------------

@lru_cache(maxsize=1 << 16)
def _q_values(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
    size = len(x)
    qs = []
    for i in range(size):
        # letters i+1, i+2, ... read cyclically; 0-based index (i + j - 1) % size
        xs = [x[(i + j - 1) % size] for j in range(1, size + 1)]
        ys = [y[(i + j - 1) % size] for j in range(1, size + 1)]
        best = None
        for k in range(1, size + 1):
            v = sum(xs[: k - 1]) + sum(ys[k:])
            if best is None or v < best:
                best = v
        qs.append(best)
    return tuple(qs)


def _check_pair(x: CrystalElement, y: CrystalElement) -> None:
    if x.n != y.n:
        raise ValueError(f"rank mismatch: {x.n} vs {y.n}")
    if x.restriction != y.restriction:
        raise ValueError(f"restriction mismatch: {x.restriction} vs {y.restriction}")


def energy_H(x: CrystalElement, y: CrystalElement) -> int:
    """Local energy of ``x (x) y``, normalised to ``0 <= H <= min(l, m)``."""
    _check_pair(x, y)
    return min(x.length, y.length) - _q_values(x.mult, y.mult)[0]


def combinatorial_R(x: CrystalElement, y: CrystalElement) -> tuple[CrystalElement, CrystalElement]:
    """``x (x) y -> y~ (x) x~`` with ``y~`` of length ``|y|`` and ``x~`` of length ``|x|``."""
    _check_pair(x, y)
    q = _q_values(x.mult, y.mult)
    size = len(q)
    # q[t] = Q_t; the entry for letter t+1 uses Q_{t+1} - Q_t, cyclically
    xt = tuple(x.mult[t] + q[(t + 1) % size] - q[t] for t in range(size))
    yt = tuple(y.mult[t] + q[t] - q[(t + 1) % size] for t in range(size))
    return CrystalElement(x.n, yt, x.restriction), CrystalElement(x.n, xt, x.restriction)


def affine_R(a: AffineElement, b: AffineElement) -> tuple[AffineElement, AffineElement]:
    h = energy_H(a.element, b.element)
    yt, xt = combinatorial_R(a.element, b.element)
    return AffineElement(yt, b.mode - h), AffineElement(xt, a.mode + h)


def carry_steps(prefix: Sequence[CrystalElement], b: CrystalElement) -> Iterator[tuple[int, CrystalElement, int]]:
    """Move ``b`` leftwards through ``prefix``.

    Yields ``(k, b_in, H(prefix[k] (x) b_in))`` for k = len-1, ..., 0, where
    ``b_in`` is the carried element just before it meets ``prefix[k]``.
    """
    for k in range(len(prefix) - 1, -1, -1):
        yield k, b, energy_H(prefix[k], b)
        b, _ = combinatorial_R(prefix[k], b)


def carry_left(prefix: Sequence[CrystalElement], b: CrystalElement) -> tuple[CrystalElement, TensorWord]:
    """``prefix (x) b  ~  b' (x) prefix'``; returns ``(b', prefix')``."""
    out = list(prefix)
    for k in range(len(out) - 1, -1, -1):
        b, out[k] = combinatorial_R(out[k], b)
    return b, tuple(out)
