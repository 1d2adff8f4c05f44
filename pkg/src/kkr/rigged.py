"""Rigged configurations of type A^(1)_n."""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Sequence


def _canonical_level(mu: Sequence[int], J: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    rows = sorted(zip(mu, J), key=lambda r: (-r[0], r[1]))
    return tuple(r[0] for r in rows), tuple(r[1] for r in rows)


@dataclass(frozen=True)
class RiggedConfiguration:
    """``(mu0, (mu1, J1), ..., (mun, Jn))``.

    In partition mode (the default) rows are stored longest first, and rows of
    equal length carry increasing riggings.  With ``composition=True`` the
    given row order is kept verbatim.
    """

    n: int
    mu0: tuple[int, ...]
    levels: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    composition: bool = field(default=False)

    def __post_init__(self):
        mu0 = tuple(int(x) for x in self.mu0)
        levels = tuple((tuple(int(x) for x in mu), tuple(int(x) for x in J)) for mu, J in self.levels)
        if len(levels) != self.n:
            raise ValueError(f"expected {self.n} levels, got {len(levels)}")
        for a, (mu, J) in enumerate(levels, start=1):
            if len(mu) != len(J):
                raise ValueError(f"level {a}: {len(mu)} rows but {len(J)} riggings")
            if any(x <= 0 for x in mu):
                raise ValueError(f"level {a}: row lengths must be positive")
        if any(x <= 0 for x in mu0):
            raise ValueError("mu0 entries must be positive")
        if not self.composition:
            mu0 = tuple(sorted(mu0, reverse=True))
            levels = tuple(_canonical_level(mu, J) for mu, J in levels)
        object.__setattr__(self, "mu0", mu0)
        object.__setattr__(self, "levels", levels)

    @classmethod
    def empty(cls, n: int, mu0: Sequence[int], composition: bool = False) -> RiggedConfiguration:
        return cls(n, tuple(mu0), tuple(((), ()) for _ in range(n)), composition)

    def mu(self, a: int) -> tuple[int, ...]:
        if a == 0:
            return self.mu0
        if 1 <= a <= self.n:
            return self.levels[a - 1][0]
        return ()

    def riggings(self, a: int) -> tuple[int, ...]:
        return self.levels[a - 1][1]

    def truncated(self, a: int) -> RiggedConfiguration:
        """The A^(1)_{n-a} configuration ``(mu^(a), (mu^(a+1), J^(a+1)), ...)``."""
        return RiggedConfiguration(self.n - a, self.mu(a), self.levels[a:], self.composition)

    def as_partitions(self) -> RiggedConfiguration:
        return RiggedConfiguration(self.n, self.mu0, self.levels, composition=False)

    # JSON

    def to_dict(self) -> dict:
        d = {
            "n": self.n,
            "mu0": list(self.mu0),
            "levels": [{"mu": list(mu), "J": list(J)} for mu, J in self.levels],
        }
        if self.composition:
            d["composition"] = True
        return d

    @classmethod
    def from_dict(cls, d: dict) -> RiggedConfiguration:
        try:
            levels = tuple((tuple(lv["mu"]), tuple(lv["J"])) for lv in d["levels"])
            return cls(int(d["n"]), tuple(d["mu0"]), levels, bool(d.get("composition", False)))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed rigged configuration: {exc}") from exc

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> RiggedConfiguration:
        return cls.from_dict(json.loads(text))


def E(rc: RiggedConfiguration, a: int, j: int) -> int:
    """``sum_i min(j, mu^(a)_i)``; zero above level n."""
    return sum(min(j, x) for x in rc.mu(a))


def vacancy(rc: RiggedConfiguration, a: int, j: int) -> int:
    if not 1 <= a <= rc.n:
        raise ValueError(f"level {a} outside 1..{rc.n}")
    return E(rc, a - 1, j) - 2 * E(rc, a, j) + E(rc, a + 1, j)


class Violation(NamedTuple):
    a: int
    j: int
    rows: tuple[int, ...]
    reason: str


def validate(rc: RiggedConfiguration) -> Violation | None:
    """Return ``None`` if ``rc`` is a rigged configuration, else the first violation.

    ``rows`` are 0-based row indices within ``mu^(a)``.
    """
    for a in range(1, rc.n + 1):
        mu, J = rc.levels[a - 1]
        for j in sorted(set(mu), reverse=True):
            rows = tuple(k for k, x in enumerate(mu) if x == j)
            rig = [J[k] for k in rows]
            p = vacancy(rc, a, j)
            if rig[0] < 0:
                return Violation(a, j, rows, f"negative rigging {rig[0]}")
            if any(s > t for s, t in zip(rig, rig[1:])):
                return Violation(a, j, rows, f"riggings {rig} not weakly increasing")
            if rig[-1] > p:
                return Violation(a, j, rows, f"rigging {rig[-1]} exceeds vacancy number {p}")
    return None


def is_valid(rc: RiggedConfiguration) -> bool:
    return validate(rc) is None


# -- enumeration --------------------------------------------------------------

def partitions(total: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``total`` in reverse lexicographic order."""
    if largest is None:
        largest = total
    if total == 0:
        yield ()
        return
    for head in range(min(total, largest), 0, -1):
        for tail in partitions(total - head, head):
            yield (head,) + tail


def _configurations(n: int, mu0: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
    # |mu^(a)| <= |mu^(a-1)| for every configuration admitting a rigging
    def grow(prefix, bound):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for size in range(bound + 1):
            for mu in partitions(size):
                yield from grow(prefix + [mu], size)

    yield from grow([], sum(mu0))


def _riggings_for_level(mu: tuple[int, ...], bounds: dict[int, int]) -> Iterator[tuple[int, ...]]:
    blocks = []
    for j in sorted(set(mu), reverse=True):
        count = mu.count(j)
        blocks.append(list(itertools.combinations_with_replacement(range(bounds[j] + 1), count)))
    for choice in itertools.product(*blocks):
        yield tuple(itertools.chain.from_iterable(choice))


def enumerate_rcs(n: int, mu0: Sequence[int], cap: int = 12) -> Iterator[RiggedConfiguration]:
    """Every rigged configuration with the given ``mu0``, each exactly once."""
    mu0 = tuple(sorted(mu0, reverse=True))
    if sum(mu0) > cap:
        raise ValueError(f"|mu0| = {sum(mu0)} exceeds cap {cap}")
    for config in _configurations(n, mu0):
        skeleton = RiggedConfiguration(n, mu0, tuple((mu, (0,) * len(mu)) for mu in config))
        bounds = []
        for a, mu in enumerate(config, start=1):
            b = {j: vacancy(skeleton, a, j) for j in set(mu)}
            if any(v < 0 for v in b.values()):
                break
            bounds.append(b)
        else:
            per_level = [list(_riggings_for_level(mu, b)) for mu, b in zip(config, bounds)]
            for rigs in itertools.product(*per_level):
                yield RiggedConfiguration(n, mu0, tuple(zip(config, rigs)))


# -- rendering ----------------------------------------------------------------

def _color(text: str, code: str) -> str:
    if os.environ.get("KKR_COLOR", "0") == "1":
        return f"\033[{code}m{text}\033[0m"
    return text


def render_ascii(rc: RiggedConfiguration) -> str:
    """One block per level: vacancy number, row of ``[]`` cells, rigging."""
    lines = [f"A^(1)_{rc.n} rigged configuration", "mu(0): " + (" ".join(map(str, rc.mu0)) or "-")]
    for a in range(1, rc.n + 1):
        mu, J = rc.levels[a - 1]
        lines.append(f"mu({a}):")
        if not mu:
            continue
        vac = [vacancy(rc, a, j) for j in mu]
        vw = max(len(str(v)) for v in vac)
        cw = 2 * max(mu)
        for j, p, r in zip(mu, vac, J):
            cells = ("[]" * j).ljust(cw)
            lines.append(f"  {_color(str(p).rjust(vw), '36')} {cells} {_color(str(r), '33')}")
    return "\n".join(lines)
