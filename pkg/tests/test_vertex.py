import logging

import pytest

from kkr import fixtures
from kkr.crystal import CrystalElement, format_word, parse_affine_word, parse_word
from kkr.rigged import RiggedConfiguration
from kkr.vertex import (
    InvalidRiggedConfiguration,
    NormalOrderError,
    assign_modes,
    intermediate_path,
    map_C,
    map_C_all,
    map_Phi,
    normal_order,
    normal_order_chain,
    rc_to_path,
    rc_to_path_all,
    rc_to_path_trace,
    reorderings,
)


def words(ws):
    return {format_word(w) for w in ws}


def test_reorderings_keep_equal_lengths_in_place():
    s = parse_affine_word("1:0*2:3", 1)
    assert reorderings(s) == [s]
    s = parse_affine_word("12:0*2:3*1:5", 1)
    for w in reorderings(s):
        lengths = [b.element.length for b in w]
        singles = [k for k, x in enumerate(lengths) if x == 1]
        assert len(singles) == 2


def test_normal_order_example():
    s = fixtures.normal_order_example()
    chain = normal_order_chain(s)
    assert len(chain[0]) == 6
    listed = {"3:5*1224:5*13:9", "1223:5*4:5*13:9"}
    assert words(chain[1]) == listed == words(chain[2])
    best, modes = normal_order(s)
    assert modes == (5, 5, 9)
    assert format_word(best) == "1223:5*4:5*13:9"


def test_normal_order_of_single_factor():
    s = parse_affine_word("12:4", 2)
    assert normal_order(s) == (s, (4,))


def test_worked_trace():
    rc = fixtures.worked_rc()
    path, stages = rc_to_path_trace(rc)
    assert format_word(path) == fixtures.WORKED_PATH
    assert [(st.a, format_word(st.path), format_word(st.affine)) for st in stages[:2]] == [
        (3, "4", "4:1"),
        (2, "33*4", "3:1*34:3"),
    ]
    assert format_word(stages[2].path) == "22*23*4*3"
    forms = map_C_all(1, rc, stages[2].path)
    assert words(forms) == {"2:1*3:2*22:3*34:3", "2:1*23:2*2:3*34:3", "2:1*23:2*24:3*3:3"}
    assert {tuple(b.mode for b in w) for w in forms} == {(1, 2, 3, 3)}


def test_intermediate_paths():
    rc = fixtures.worked_rc()
    assert format_word(intermediate_path(rc, 3)) == "4"
    assert format_word(intermediate_path(rc, 2)) == "33*4"
    assert format_word(intermediate_path(rc, 0)) == fixtures.WORKED_PATH
    with pytest.raises(ValueError):
        intermediate_path(rc, 4)


def test_assign_modes_checks_inputs():
    p = parse_word("4", 3, 3)
    assert format_word(assign_modes((1,), (0,), p, 3)) == "4:1"
    with pytest.raises(ValueError):
        assign_modes((2,), (0,), p, 3)
    with pytest.raises(ValueError):
        assign_modes((1,), (0,), p, 3, M=0)
    with pytest.raises(ValueError):
        map_C(3, fixtures.worked_rc(), parse_word("4*4", 3, 3))


def test_phi_rejects_bad_modes():
    with pytest.raises(NormalOrderError):
        map_Phi(1, parse_affine_word("2:-1", 1, 1), (1,), 1)
    with pytest.raises(NormalOrderError):
        map_Phi(1, parse_affine_word("2:3*2:1", 1, 1), (1, 1, 1), 1)


def test_phi_warns_on_dirty_tail(caplog):
    # too little vacuum: the pushed-through word cannot be emptied
    with caplog.at_level(logging.WARNING, logger="kkr.vertex"):
        map_Phi(1, parse_affine_word("2:0", 1, 1), (1,), 1)
    assert not caplog.records
    with caplog.at_level(logging.WARNING, logger="kkr.vertex"):
        map_Phi(1, parse_affine_word("2:5", 1, 1), (1,), 1)
    assert any("tail" in r.message for r in caplog.records)


def test_trivial_configurations():
    rc = RiggedConfiguration.empty(2, (2,))
    assert format_word(rc_to_path(rc)) == "11"
    rc = RiggedConfiguration.empty(3, (1, 1, 1))
    assert format_word(rc_to_path(rc)) == "1*1*1"


def test_invalid_rc_rejected():
    bad = RiggedConfiguration(1, (1,), (((1,), (0,)),))
    with pytest.raises(InvalidRiggedConfiguration):
        rc_to_path(bad)
    with pytest.raises(InvalidRiggedConfiguration):
        rc_to_path_all(bad)


def test_all_branches_agree_on_worked_example():
    assert {format_word(p) for p in rc_to_path_all(fixtures.worked_rc())} == {fixtures.WORKED_PATH}


def test_composition_shapes():
    # mu0 given as a composition: rows come out in the given order
    rc = RiggedConfiguration(1, (1, 2), (((1,), (0,)),), composition=True)
    path = rc_to_path(rc)
    assert [b.length for b in path] == [1, 2]
    assert isinstance(path[0], CrystalElement)
