import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kkr import fixtures
from kkr.rigged import (
    E,
    RiggedConfiguration,
    enumerate_rcs,
    is_valid,
    partitions,
    render_ascii,
    vacancy,
    validate,
)


def rc1(mu0, mu, J):
    return RiggedConfiguration(1, tuple(mu0), ((tuple(mu), tuple(J)),))


def test_E_values():
    rc = RiggedConfiguration(2, (1,) * 6, (((2, 2, 1, 1), (0, 0, 0, 0)), ((), ())))
    assert E(rc, 1, 1) == 4
    assert E(rc, 2, 5) == 0
    assert E(rc, 3, 1) == 0
    assert E(fixtures.thirteen_box_rc(), 1, 2) == 5


def test_vacancy_values():
    rc = fixtures.thirteen_box_rc()
    assert vacancy(rc, 1, 1) == 13 - 2 * 3 + 2 == 9
    assert vacancy(fixtures.worked_rc(), 2, 1) == 1
    assert vacancy(RiggedConfiguration.empty(2, (1,) * 5), 1, 3) == 5
    with pytest.raises(ValueError):
        vacancy(rc, 4, 1)


def test_validate_reports_violations():
    assert validate(fixtures.worked_rc()) is None
    assert validate(fixtures.thirteen_box_rc()) is None
    bad = validate(rc1((2,), (1,), (-1,)))
    assert bad.a == 1 and "negative" in bad.reason
    over = validate(rc1((1,), (1,), (0,)))
    assert over.j == 1 and "vacancy" in over.reason
    assert not is_valid(rc1((1, 1), (1,), (1,)))


def test_composition_order_is_checked_verbatim():
    comp = RiggedConfiguration(1, (2,), (((1, 1), (1, 0)),), composition=True)
    assert "increasing" in validate(comp).reason
    assert is_valid(comp.as_partitions()) is False  # vacancy 2 - 4 < 0


def test_canonical_form_in_partition_mode():
    a = RiggedConfiguration(1, (1, 2, 1), (((1, 2), (3, 0)),))
    assert a.mu0 == (2, 1, 1)
    assert a.levels == (((2, 1), (0, 3)),)


@pytest.mark.parametrize(
    "n, mu0, count",
    [(1, (1,), 1), (1, (1, 1), 2), (1, (2,), 1), (2, (1, 1, 1), 4), (1, (1, 1, 1), 3)],
)
def test_enumeration_counts(n, mu0, count):
    assert len(list(enumerate_rcs(n, mu0))) == count


def test_enumeration_matches_brute_force():
    # every valid RC with small row lengths and riggings must show up exactly once
    for n, mu0 in [(1, (2, 1)), (2, (1, 1, 1)), (2, (2, 1)), (1, (1, 1, 1, 1))]:
        found = list(enumerate_rcs(n, mu0))
        assert len(found) == len(set(found))
        N = sum(mu0)
        brute = set()
        shapes = [p for s in range(N + 1) for p in partitions(s)]
        for config in itertools.product(shapes, repeat=n):
            for rigs in itertools.product(*[itertools.product(range(N + 1), repeat=len(mu)) for mu in config]):
                rc = RiggedConfiguration(n, mu0, tuple(zip(config, rigs)))
                if is_valid(rc):
                    brute.add(rc)
        assert set(found) == brute


def test_enumeration_cap():
    with pytest.raises(ValueError):
        list(enumerate_rcs(1, (1,) * 13))


def test_json_round_trip():
    for rc in (fixtures.worked_rc(), fixtures.thirteen_box_rc()):
        assert RiggedConfiguration.from_json(rc.to_json()) == rc
    comp = RiggedConfiguration(1, (1, 2), (((1,), (0,)),), composition=True)
    assert RiggedConfiguration.from_json(comp.to_json()) == comp
    with pytest.raises(ValueError):
        RiggedConfiguration.from_dict({"n": 1, "mu0": [1]})


def test_render_ascii(monkeypatch):
    monkeypatch.delenv("KKR_COLOR", raising=False)
    text = render_ascii(fixtures.thirteen_box_rc())
    lines = text.splitlines()
    assert lines[1] == "mu(0): " + " ".join(["1"] * 13)
    assert "  9 []       4" in lines
    monkeypatch.setenv("KKR_COLOR", "1")
    assert "\033[" in render_ascii(fixtures.thirteen_box_rc())


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 2), st.lists(st.integers(1, 3), min_size=1, max_size=3), st.randoms(use_true_random=False))
def test_validity_ignores_row_order(n, mu0, rnd):
    rcs = list(enumerate_rcs(n, mu0))
    rc = rnd.choice(rcs)
    shuffled = []
    for mu, J in rc.levels:
        rows = list(zip(mu, J))
        rnd.shuffle(rows)
        shuffled.append((tuple(r[0] for r in rows), tuple(r[1] for r in rows)))
    mu0_perm = list(rc.mu0)
    rnd.shuffle(mu0_perm)
    again = RiggedConfiguration(n, tuple(mu0_perm), tuple(shuffled))
    assert again == rc and is_valid(again)
