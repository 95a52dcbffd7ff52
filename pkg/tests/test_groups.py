import pytest

from biquandle.core import AxiomError, associated_quandle, is_medial_biquandle, validate_quandle
from biquandle.groups import (
    affine_biquandle,
    affine_quandle,
    core_quandle,
    cyclic_group,
    direct_product,
    multiplication_map,
    product_biquandle,
    symmetric_group,
    trivial_quandle,
    wada_biquandle,
)
from biquandle import catalog
from biquandle.core import quandle_isomorphism
from biquandle.perm import Permutation


def test_groups_validate():
    assert cyclic_group(5).is_abelian()
    assert not symmetric_group(3).is_abelian()
    assert direct_product(cyclic_group(2), cyclic_group(3)).n == 6


def test_core_of_z3_is_dihedral():
    q = core_quandle(cyclic_group(3))
    assert quandle_isomorphism(q, catalog.quandle("C")) is not None


def test_affine_z3_is_dihedral():
    q = affine_quandle(cyclic_group(3), multiplication_map(3, 2))
    assert quandle_isomorphism(q, catalog.quandle("C")) is not None


def test_affine_needs_abelian_and_automorphism():
    with pytest.raises(AxiomError):
        affine_quandle(symmetric_group(3), multiplication_map(6, 1))
    with pytest.raises(AxiomError):
        affine_quandle(cyclic_group(4), Permutation((1, 0, 2, 3)))


@pytest.mark.parametrize("g", [cyclic_group(2), cyclic_group(3), cyclic_group(4), symmetric_group(3)])
def test_wada_is_a_biquandle(g):
    b = wada_biquandle(g)
    assert b.n == g.n


@pytest.mark.parametrize("n", [3, 5, 7])
def test_affine_biquandles(n):
    for k in range(1, n):
        for m in range(1, n):
            b = affine_biquandle(cyclic_group(n), multiplication_map(n, k), multiplication_map(n, m))
            assert is_medial_biquandle(b)


def test_product_biquandle():
    b = product_biquandle(catalog.quandle("C"), trivial_quandle(2))
    assert b.n == 6
    assert validate_quandle(associated_quandle(b).table)
