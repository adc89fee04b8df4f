from fractions import Fraction

import pytest

from lsconf.algebras import AlgebraSpec, IdentityError, tensor
from lsconf.cohomology import (CocycleFamily, CohomologyError, NoUnitFound,
                               SpanningConditionError, check_spanning,
                               coboundary_space, coord_index,
                               family_from_coords, family_to_coords,
                               find_right_unit, generate_cocycle_system, h2,
                               hardcoded_cocycle_system, ncols,
                               unital_vanishing_check)
from lsconf.conformal import build_rank_one, check_conformal_left_symmetry
from lsconf.linalg import nullspace
from lsconf import constructions as cons

from conftest import (dual_numbers_ls_poisson, two_dim_lw, unital_one_dim,
                      unital_two_dim)

F = Fraction


def nonzero_entries(fam):
    return {(i, a, b): x for i, f in enumerate(fam.forms)
            for a, row in enumerate(f) for b, x in enumerate(row) if x}


def test_rank_one_central_extensions():
    res = h2(build_rank_one(0), 0)
    assert (res.dim_Z2, res.dim_B2, res.dim_H2) == (2, 1, 1)
    assert nonzero_entries(res.representatives[0]) == {(2, 0, 0): 1}
    for c in (1, -2, F(5, 3)):
        assert h2(build_rank_one(c), 0).dim_H2 == 0


def test_two_dim_cocycle_content():
    res = h2(two_dim_lw(), 0)
    assert (res.dim_Z2, res.dim_B2, res.dim_H2) == (4, 2, 2)
    # canonical Z2 basis: alpha_3(L,W), alpha_2(L,L), alpha_1(L,L), alpha_1(L,W)
    assert [nonzero_entries(f) for f in res.cocycle_basis] == [
        {(3, 0, 1): 1}, {(2, 0, 0): 1}, {(1, 0, 0): 1}, {(1, 0, 1): 1}]
    assert [nonzero_entries(f) for f in res.representatives] == [
        {(3, 0, 1): 1}, {(2, 0, 0): 1}]


def test_unital_vanishing():
    u1 = unital_one_dim()
    for beta in (1, -1, F(2, 7)):
        assert h2(u1, beta).dim_H2 == 0
        assert unital_vanishing_check(u1, beta)
    assert unital_vanishing_check(unital_two_dim(), 3)
    assert find_right_unit(two_dim_lw()) == [1, 0]


def test_unital_vanishing_preconditions():
    with pytest.raises(ValueError):
        unital_vanishing_check(unital_one_dim(), 0)
    with pytest.raises(IdentityError):
        unital_vanishing_check(build_rank_one(1), 1)
    nilpotent = AlgebraSpec("nil", 2, ("L", "W"),
                            {"ld": tensor(2, {(0, 0, 1): 1})})
    with pytest.raises(NoUnitFound):
        unital_vanishing_check(nilpotent, 1)


def test_generated_equals_hardcoded_on_examples():
    for alg in (build_rank_one(0), build_rank_one(1), two_dim_lw(),
                cons.ls_poisson_to_pre_gd(dual_numbers_ls_poisson())):
        width = ncols(3, alg.dim)
        gen = nullspace(generate_cocycle_system(alg, F(0), 3), width)
        hard = nullspace(hardcoded_cocycle_system(alg, F(0)), width)
        assert gen == hard, alg.name


def test_generated_equals_hardcoded_on_constructions(pre_gd_zoo):
    for alg in pre_gd_zoo[:8]:
        width = ncols(3, alg.dim)
        for beta in (F(0), F(1)):
            gen = nullspace(generate_cocycle_system(alg, beta, 3), width)
            hard = nullspace(hardcoded_cocycle_system(alg, beta), width)
            assert gen == hard, (alg.name, beta)


def test_hardcoded_variant_preconditions():
    r1 = build_rank_one(1)
    with pytest.raises(ValueError):
        hardcoded_cocycle_system(r1, 0, variant="nope")
    with pytest.raises(ValueError):
        hardcoded_cocycle_system(r1, 0, variant="pre_novikov")  # circ present
    u1 = unital_one_dim()
    with pytest.raises(ValueError):
        hardcoded_cocycle_system(u1, 1, variant="pre_novikov_beta0")
    with pytest.raises(IdentityError):
        hardcoded_cocycle_system(
            AlgebraSpec("bad", 1, ("e",), {"rd": tensor(1, {(0, 0, 0): 1})}), 0)


def test_coboundaries_live_inside_cocycles(pre_gd_zoo):
    for alg in pre_gd_zoo[:8]:
        for beta in (F(0), F(1), F(-1, 2)):
            z2 = nullspace(generate_cocycle_system(alg, beta, 3),
                           ncols(3, alg.dim))
            assert z2.contains_subspace(coboundary_space(alg, beta, 3))


def test_cap_stability_under_spanning():
    for alg in (build_rank_one(0), build_rank_one(1), two_dim_lw()):
        assert check_spanning(alg)
        assert h2(alg, 0, 3).dim_H2 == h2(alg, 0, 6).dim_H2


def test_refusal_without_spanning_product():
    zero = AlgebraSpec("z", 1, ("e",), {})
    assert check_spanning(zero) == set()
    with pytest.raises(SpanningConditionError):
        h2(zero, 0)
    res = h2(zero, 0, degree_cap=3)
    assert res.cap_limited
    assert (res.dim_Z2, res.dim_B2, res.dim_H2) == (4, 0, 4)


def test_spanning_report():
    res = h2(build_rank_one(1), 0)
    assert res.spanning == ("ast", "ld", "star")
    assert not res.cap_limited


def test_cocycles_keep_lambda_product_left_symmetric():
    lw = two_dim_lw()
    for fam in h2(lw, 0).cocycle_basis:
        assert check_conformal_left_symmetry(lw, cocycle=fam, beta=0).passed
    # a non-cocycle breaks it
    bad = CocycleFamily(3, (((0, 0), (0, 0)),) * 3 + ((((1, 0), (0, 0))),))
    assert not check_conformal_left_symmetry(lw, cocycle=bad, beta=0).passed


def test_family_coordinate_roundtrip():
    fam = CocycleFamily(2, (((1,),), ((F(-2, 3),),), ((0,),)))
    vec = family_to_coords(fam, 3, 1)
    assert family_from_coords(3, 1, vec).forms[1][0][0] == F(-2, 3)
    assert vec[coord_index(3, 1, 1, 0, 0)] == F(-2, 3)
    with pytest.raises(ValueError):
        family_to_coords(fam, 0, 1)  # alpha_1 would be dropped
