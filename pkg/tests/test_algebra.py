from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import point, projective_space, sphere, torus
from negder import (Element, Generator, GradedAlgebra, Presentation,
                    build_monomial_algebra, subalgebra_generated, tensor)
from negder.linalg import rref


def test_projective_plane_basis():
    cp2 = projective_space(2)
    assert cp2.labels == ["1", "x", "x^2"]
    assert cp2.degrees == [0, 2, 4]
    assert cp2.unit == 0
    assert cp2.top_degree == 4
    assert cp2.dim == 3


def test_basis_sorted_by_degree_then_exponent():
    alg = build_monomial_algebra(Presentation(
        "mix", (Generator("x", 2, 3), Generator("y", 4, 2))))
    # degree 4 holds both y (0,1) and x^2 (2,0); lex order puts y first
    assert alg.labels == ["1", "x", "y", "x^2", "x*y", "x^2*y"]
    assert alg.degrees == [0, 2, 4, 4, 6, 8]


def test_odd_generator_squares_to_zero():
    s3 = sphere(3)
    x = s3.basis_element(1)
    assert not s3.multiply(x, x)


def test_odd_odd_anticommute():
    alg = build_monomial_algebra(Presentation(
        "ab", (Generator("a", 3), Generator("b", 5))))
    ia, ib, iab = (alg.labels.index(s) for s in ("a", "b", "a*b"))
    assert alg.products[(ia, ib)] == {iab: 1}
    assert alg.products[(ib, ia)] == {iab: -1}


def test_odd_generator_rejects_higher_truncation():
    with pytest.raises(ValueError, match="truncate at 2"):
        build_monomial_algebra(Presentation("bad", (Generator("a", 3, 4),)))


def test_duplicate_symbols_rejected():
    with pytest.raises(ValueError, match="duplicate"):
        build_monomial_algebra(Presentation(
            "bad", (Generator("a", 2, 2), Generator("a", 4, 2))))


def test_point_algebra():
    pt = point()
    assert pt.labels == ["1"]
    assert pt.top_degree == 0
    assert not pt.validate()


def test_multiply_unit_and_powers():
    cp2 = projective_space(2)
    one, x, x2 = (cp2.basis_element(i) for i in range(3))
    assert cp2.multiply(one, x) == x
    assert cp2.multiply(x, x) == x2
    assert not cp2.multiply(x, x2)
    combo = cp2.multiply(x + 2 * one, x)
    assert combo == x2 + 2 * x


def test_multiply_is_graded():
    for alg in (projective_space(3), torus(3), sphere(5),
                tensor(projective_space(2), sphere(4))):
        for i in range(alg.dim):
            for j in range(alg.dim):
                prod = alg.multiply(alg.basis_element(i), alg.basis_element(j))
                want = alg.degrees[i] + alg.degrees[j]
                assert all(alg.degrees[k] == want for k in prod.coeffs)


def test_graded_piece():
    cp2 = projective_space(2)
    assert cp2.graded_piece(0) == [0]
    assert cp2.graded_piece(2) == [1]
    assert cp2.graded_piece(3) == []
    assert cp2.graded_piece(7) == []


def test_tensor_with_point_is_isomorphic():
    cp2 = projective_space(2)
    prod = tensor(cp2, point())
    assert prod.degrees == cp2.degrees
    assert prod.unit == cp2.unit
    assert prod.products == cp2.products
    assert prod.labels != cp2.labels  # only the labels differ


def test_tensor_dimension_and_koszul_sign():
    s3 = sphere(3)
    both = tensor(s3, s3)
    assert both.dim == 4
    assert tensor(projective_space(2), s3).dim == 6
    # (1 (x) y) * (x (x) 1) = -(x (x) y): odd classes swap past each other
    one_y = both.basis_element(1)
    x_one = both.basis_element(2)
    assert both.multiply(one_y, x_one) == Element({3: -1})
    assert both.multiply(x_one, one_y) == Element({3: 1})


def test_tensor_output_validates():
    assert not tensor(sphere(3), sphere(3)).validate()
    assert not tensor(projective_space(2), torus(2)).validate()


def test_tensor_flattening_is_associative():
    a, b, c = projective_space(1), sphere(3), sphere(2)
    left = tensor(tensor(a, b), c)
    right = tensor(a, tensor(b, c))
    assert left.degrees == right.degrees
    assert left.unit == right.unit
    assert left.products == right.products


def test_element_arithmetic():
    e = Element({0: Fraction(1, 2), 2: -1})
    assert e.coeff(0) == Fraction(1, 2)
    assert e.coeff(1) == 0
    assert not (e - e)
    assert -e == Element({0: Fraction(-1, 2), 2: 1})
    assert 2 * e == Element({0: 1, 2: -2})
    assert Element({0: 0}) == Element()


def test_format_element():
    cp2 = projective_space(2)
    assert cp2.format_element(Element()) == "0"
    assert cp2.format_element(Element({0: 1})) == "1"
    assert cp2.format_element(Element({1: -2, 2: Fraction(1, 3)})) == "-2*x + 1/3*x^2"
    assert cp2.format_element(Element({1: 1, 2: -1})) == "x - x^2"


def test_validate_accepts_builder_output():
    for alg in (projective_space(4), sphere(7), torus(3),
                build_monomial_algebra(Presentation(
                    "mixed", (Generator("a", 3), Generator("x", 2, 4))))):
        assert alg.validate() == []


def test_validate_degree_corruption():
    cp2 = projective_space(2)
    products = dict(cp2.products)
    products[(1, 1)] = {1: Fraction(1)}  # x * x = x breaks only additivity
    bad = GradedAlgebra(cp2.labels, cp2.degrees, cp2.unit, products)
    violations = bad.validate()
    assert len(violations) == 1
    assert "degree additivity" in violations[0]


def test_validate_commutativity_corruption():
    alg = build_monomial_algebra(Presentation(
        "ab", (Generator("a", 3), Generator("b", 5))))
    ia, ib, iab = (alg.labels.index(s) for s in ("a", "b", "a*b"))
    products = dict(alg.products)
    products[(ib, ia)] = {iab: Fraction(1)}  # drop the sign of b*a
    bad = GradedAlgebra(alg.labels, alg.degrees, alg.unit, products)
    violations = bad.validate()
    assert len(violations) == 1
    assert "graded commutativity" in violations[0]


def test_validate_missing_unit_row():
    cp1 = projective_space(1)
    products = {k: v for k, v in cp1.products.items() if k != (0, 1)}
    bad = GradedAlgebra(cp1.labels, cp1.degrees, cp1.unit, products)
    assert any("unit law" in v for v in bad.validate())


def test_subalgebra_generated_by_power():
    cp2 = projective_space(2)
    closure = subalgebra_generated(cp2, [cp2.basis_element(1)])
    assert closure == [Element({0: 1}), Element({1: 1}), Element({2: 1})]
    small = subalgebra_generated(cp2, [cp2.basis_element(2)])
    assert small == [Element({0: 1}), Element({2: 1})]
    assert subalgebra_generated(cp2, []) == [Element({0: 1})]


def test_subalgebra_closed_under_products():
    t3 = torus(3)
    seed = [t3.basis_element(1), t3.basis_element(2) + t3.basis_element(3)]
    closure = subalgebra_generated(t3, seed)
    rows = []
    for e in closure:
        row = [Fraction(0)] * t3.dim
        for i, c in e.coeffs.items():
            row[i] = c
        rows.append(row)
    base_rank = rref(rows)[1]
    assert base_rank == len(closure)
    for e1 in closure:
        for e2 in closure:
            prod = t3.multiply(e1, e2)
            row = [Fraction(0)] * t3.dim
            for i, c in prod.coeffs.items():
                row[i] = c
            assert rref(rows + [row])[1] == base_rank


@st.composite
def presentations(draw):
    count = draw(st.integers(0, 3))
    gens = []
    for idx in range(count):
        degree = draw(st.integers(1, 8))
        truncation = 2 if degree % 2 else draw(st.integers(2, 4))
        gens.append(Generator(f"g{idx}", degree, truncation))
    return Presentation("random", tuple(gens))


@given(presentations())
@settings(max_examples=30, deadline=None)
def test_random_presentations_validate(p):
    alg = build_monomial_algebra(p)
    assert alg.validate() == []
    assert alg.dim == len({tuple(e) for e in alg.monomial_exponents})


@given(presentations(), presentations())
@settings(max_examples=15, deadline=None)
def test_tensor_of_random_presentations_validates(p, q):
    a, b = build_monomial_algebra(p), build_monomial_algebra(q)
    if a.dim * b.dim > 40:  # keep the cubic associativity check quick
        return
    assert tensor(a, b).validate() == []
