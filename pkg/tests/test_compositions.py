"""Compositions, bar sets, the Klein four-group action, pointing strings."""

from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polytri.compositions import (
    bar_set,
    composition_class,
    composition_from_bars,
    composition_from_pointing,
    composition_of,
    conjugate,
    count_classes,
    count_fixed,
    enumerate_compositions,
    format_composition,
    parse_composition,
    pointing_from_composition,
    pointing_string,
    reverse,
    two_eared_from_pointing,
)
from polytri.triangulation import Triangulation, enumerate_triangulations

compositions_strategy = st.lists(
    st.integers(min_value=1, max_value=9), min_size=1, max_size=12
).map(tuple)


# -- enumeration and bar sets -------------------------------------------------


@pytest.mark.parametrize("m", range(1, 13))
def test_composition_count_and_distinct(m):
    comps = list(enumerate_compositions(m))
    assert len(comps) == 2 ** (m - 1)
    assert len(set(comps)) == len(comps)
    assert all(sum(c) == m for c in comps)


def test_enumeration_endpoints():
    comps = list(enumerate_compositions(5))
    assert comps[0] == (5,)
    assert comps[-1] == (1, 1, 1, 1, 1)
    assert set(enumerate_compositions(3)) == {(3,), (2, 1), (1, 2), (1, 1, 1)}


@given(compositions_strategy)
def test_bar_set_round_trip(comp):
    m = sum(comp)
    assert composition_from_bars(m, bar_set(comp)) == comp
    assert bar_set(comp) <= set(range(1, m))


def test_bar_set_examples():
    assert sorted(bar_set((2, 5, 1))) == [2, 7]
    assert bar_set((4,)) == frozenset()
    assert composition_from_bars(8, [2, 7]) == (2, 5, 1)


def test_invalid_inputs():
    with pytest.raises(ValueError):
        list(enumerate_compositions(0))
    with pytest.raises(ValueError):
        bar_set((2, 0, 1))
    with pytest.raises(ValueError):
        composition_from_bars(4, [4])
    with pytest.raises(ValueError):
        count_fixed(3, "transpose")


# -- the involutions -----------------------------------------------------------


def test_conjugate_examples():
    assert conjugate((2, 1)) == (1, 2)
    assert conjugate((3,)) == (1, 1, 1)
    assert conjugate((1,)) == (1,)
    assert conjugate((2, 5, 1)) == composition_from_bars(8, [1, 3, 4, 5, 6])


@given(compositions_strategy)
def test_involutions_and_commutation(comp):
    assert reverse(reverse(comp)) == comp
    assert conjugate(conjugate(comp)) == comp
    assert conjugate(reverse(comp)) == reverse(conjugate(comp))


@given(compositions_strategy)
def test_conjugate_complements_bars(comp):
    m = sum(comp)
    assert bar_set(conjugate(comp)) == frozenset(range(1, m)) - bar_set(comp)


@pytest.mark.parametrize("m", range(1, 11))
def test_class_sizes_divide_four(m):
    total = 0
    for comp in enumerate_compositions(m):
        cls = composition_class(comp)
        assert len(cls) in (1, 2, 4)
        assert all(sum(c) == m for c in cls)
        total += 1
    assert total == 2 ** (m - 1)


# -- fixed points and class counts ----------------------------------------------


@pytest.mark.parametrize("m", range(1, 17))
def test_count_fixed_against_filtering(m):
    comps = list(enumerate_compositions(m))
    assert count_fixed(m, "reversal") == sum(reverse(c) == c for c in comps)
    assert count_fixed(m, "conjugation") == sum(conjugate(c) == c for c in comps)
    assert count_fixed(m, "conj_rev") == sum(
        conjugate(reverse(c)) == c for c in comps
    )


def test_count_fixed_spec_values():
    assert count_fixed(4, "reversal") == 4
    assert count_fixed(5, "conjugation") == 0
    assert count_fixed(1, "conjugation") == 1
    assert count_fixed(3, "conj_rev") == 2
    assert count_fixed(4, "conj_rev") == 0


@pytest.mark.parametrize("m", range(2, 17))
def test_count_classes_methods_agree(m):
    direct = count_classes(m, "direct")
    assert count_classes(m, "closed") == direct
    assert count_classes(m, "burnside") == direct


def test_count_classes_values():
    assert count_classes(4) == 3
    assert count_classes(5) == 6
    assert count_classes(2) == 1
    assert count_classes(1, "direct") == 1
    assert count_classes(1, "burnside") == 1
    with pytest.raises(ValueError):
        count_classes(1, "closed")
    with pytest.raises(ValueError):
        count_classes(4, "montecarlo")


# -- text formats ----------------------------------------------------------------


def test_composition_text_round_trip():
    assert parse_composition("2+5+1") == (2, 5, 1)
    assert format_composition((2, 5, 1)) == "2+5+1"
    for comp in enumerate_compositions(6):
        assert parse_composition(format_composition(comp)) == comp
    for bad in ["", "2+0+1", "2++1", "a+b"]:
        with pytest.raises(ValueError):
            parse_composition(bad)


# -- pointing strings --------------------------------------------------------------


def test_standard_construction_worked_example():
    t = two_eared_from_pointing("DUDDDDU")
    assert str(t) == "11:1-10,2-9,2-10,3-9,4-9,5-9,6-8,6-9"
    assert t.ears() == ((0, 1, 10), (6, 7, 8))
    tris = t.triangles()
    assert (2, 9, 10) in tris and (6, 8, 9) in tris
    assert composition_of(t) == (2, 5, 1)


def test_standard_construction_small():
    assert str(two_eared_from_pointing("D")) == "5:1-4,2-4"
    assert str(two_eared_from_pointing("U")) == "5:1-3,1-4"


@pytest.mark.parametrize("n", range(5, 13))
def test_pointing_round_trip_exhaustive(n):
    for bits in product("UD", repeat=n - 4):
        s = "".join(bits)
        t = two_eared_from_pointing(s)
        assert t.n == n
        assert t.ear_count() == 2
        assert pointing_string(t) == s


def test_pointing_composition_round_trip():
    for m in range(2, 11):
        for comp in enumerate_compositions(m):
            assert composition_from_pointing(pointing_from_composition(comp)) == comp


@pytest.mark.parametrize("n", range(5, 10))
def test_readings_of_dihedral_images_stay_in_class(n):
    """Any relabeling of a 2-eared triangulation reads to the same class."""
    for t in enumerate_triangulations(n):
        if t.ear_count() != 2:
            continue
        cls = composition_class(composition_of(t))
        for img in t.dihedral_images():
            assert composition_of(img) in cls


@pytest.mark.parametrize("n", range(5, 11))
def test_two_eared_standard_forms_cover_all_classes(n):
    """Every 2-eared symmetry class contains a standard-position form."""
    standard = {
        two_eared_from_pointing("".join(bits)).canonical()
        for bits in product("UD", repeat=n - 4)
    }
    all_two_eared = {
        t.canonical() for t in enumerate_triangulations(n) if t.ear_count() == 2
    }
    assert standard == all_two_eared


def test_pointing_rejects_bad_inputs():
    with pytest.raises(ValueError):
        pointing_string(Triangulation.parse("6:0-2,2-4,0-4"))  # 3 ears
    with pytest.raises(ValueError):
        pointing_string(Triangulation.parse("4:0-2"))  # n < 5
    with pytest.raises(ValueError):
        two_eared_from_pointing("DUX")
    with pytest.raises(ValueError):
        two_eared_from_pointing("")
    with pytest.raises(ValueError):
        pointing_from_composition((1,))
