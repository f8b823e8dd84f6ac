from fractions import Fraction

import pytest

import cliffdkp as cd


def test_matrix_unit_product():
    a = cd.basis([1], [2], 3)
    b = cd.basis([2], [3], 3)
    assert a * b == cd.basis([1], [3], 3)
    assert (b * a).is_zero()


def test_embedding_and_anticommutator():
    e1 = cd.embed_vector([1, 0])
    f1 = cd.embed_covector([1, 0])
    assert e1 * f1 + f1 * e1 == cd.unit(2)
    assert e1.coefficient([2], [1, 2]) == 1


def test_rational_coefficients():
    x = Fraction(3, 2) * cd.basis([1, 3], [2], 3)
    assert str(x) == "3/2 * E[1,3|2]"
    assert x.terms() == [([1, 3], [2], Fraction(3, 2))]


def test_adjoint_and_contraction():
    assert cd.adjoint(cd.basis([], [1], 2)) == cd.basis([1], [], 2)
    assert cd.contract(cd.basis([1], [1], 2), 1) == cd.projector_P(2)


def test_dkp_generator_and_subspace():
    g = cd.dkp_generator("b_upper_neg", [1, 0], 2)
    assert g == cd.basis([1], [], 2) - cd.basis([], [1], 2)
    assert cd.dim_zp(3, 1) == 12
    assert len(cd.zp_basis(2, 1)) == 6
    assert cd.in_zp(g * cd.projector_P(2), 2, 0)


def test_field_equations_and_bracket():
    eqs = cd.derive_dwh("1/2*(pi[1]^2+pi[2]^2)+y[]^2", 2, 0)
    assert eqs[0] == ("dp[]", "Dp[1][1][] + Dp[2][2][]", "-2*y[]")
    assert cd.bracket("y[1]", "p[1][1]", 1, 2, 1, "2,1;1,1") == "1"
    assert cd.parse_expr("y[2,1]", 3, 2) == "-y[1,2]"


def test_errors_map_to_value_error():
    with pytest.raises(ValueError):
        cd.parse_expr("y[1", 2, 1)
    with pytest.raises(ValueError):
        cd.basis([2, 1], [], 3)


def test_verify_and_cli():
    results = cd.verify("subspaces", 2, 1)
    assert all(r["pass"] for r in results)
    rc, out, _ = cd.run_cli(["dims", "--n", "2"])
    assert rc == 0 and "p=1: 6" in out
