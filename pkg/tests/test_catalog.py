from fractions import Fraction

import pytest

from dextral import catalog
from dextral.catalog import DomainError, UnknownEntryError, parse_brackets
from dextral.exactlin import FieldError, FieldSpec


def test_parse_brackets():
    t = parse_brackets("[x,y]=z; [y,y]=-z+2*w; [w,x] = 1/2*x")
    assert t[("x", "y")] == {"z": 1}
    assert t[("y", "y")] == {"z": -1, "w": 2}
    assert t[("w", "x")] == {"x": Fraction(1, 2)}


def test_ids_and_lookup():
    ids = catalog.list_ids()
    assert ids[0] == "lnotr"
    assert {f"N{i}" for i in range(1, 23)} <= set(ids)
    with pytest.raises(UnknownEntryError):
        catalog.get("N99")


def test_parameters():
    A = catalog.instantiate("N20", {"alpha": "1/2"})
    assert A.name == "N20(alpha=1/2)"
    with pytest.raises(DomainError):
        catalog.instantiate("N20", {"alpha": 1})
    with pytest.raises(DomainError):
        catalog.instantiate("N4", {"alpha": 2})
    with pytest.raises(DomainError):
        catalog.instantiate("N4", {"beta": 0})


def test_grid_override():
    grid = catalog.get("L1").param_grid([-1, 0])
    assert [g["lambda"] for g in grid] == [-1, 0]
    assert len(catalog.get("N20").param_grid()) == 4


def test_towers_family():
    for n in range(1, 6):
        assert catalog.instantiate("towers_n", {"n": n}).dim == n
    with pytest.raises(DomainError):
        catalog.instantiate("towers_n", {"n": 0})


def test_characteristic_guard():
    assert catalog.instantiate("lie7_char3").field == FieldSpec.prime(3)
    with pytest.raises(FieldError):
        catalog.instantiate("lie7_char3", field=FieldSpec.rational())


def test_expectations_are_consistent():
    for e in catalog.ENTRIES:
        x = e.expected
        assert not x.right_nilpotent or x.left_nilpotent, e.id
        assert not x.left_nilpotent or x.solvable, e.id
