from fractions import Fraction

import pytest

from conftest import projective_space, sphere, torus
from negder import (AlgebraFile, ParseError, ValidationError, detect_format,
                    load_algebra_text, parse_presentation,
                    parse_structure_constants, serialize_structure_constants,
                    tensor)
from negder.corpus import names as corpus_names
from negder.corpus import text as corpus_text

MINIMAL_TABLE = """\
basis:
1 0
x 2

unit: 1

products:
1 1 = 1*1
1 x = 1*x
"""


# --- format detection ---

def test_detect_presentation():
    assert detect_format("# c\nname t\ngenerator x degree 2\n") == "presentation"
    assert detect_format("generator y degree 3") == "presentation"


def test_detect_structure_constants():
    assert detect_format(MINIMAL_TABLE) == "structure_constants"
    assert detect_format("# note\nbasis:\n1 0\n") == "structure_constants"


def test_detect_rejects_empty_and_unknown():
    with pytest.raises(ParseError):
        detect_format("# only comments\n\n")
    with pytest.raises(ParseError):
        detect_format("widget x\n")


# --- presentation parsing ---

def test_parse_presentation_round_trip_through_builder():
    text = "name demo\ngenerator x degree 2 truncate 3\ngenerator y degree 5\n"
    alg = load_algebra_text(text)
    assert alg.name == "demo"
    assert alg.dim == 6
    assert alg.top_degree == 9
    assert not alg.validate()


def test_parse_presentation_defaults_odd_truncation():
    pres = parse_presentation("generator a degree 3\n")
    assert pres.generators[0].truncation == 2


def test_presentation_errors_carry_line_numbers():
    with pytest.raises(ParseError, match="line 2"):
        parse_presentation("name ok\nwidget x degree 2\n")
    with pytest.raises(ParseError, match="degree"):
        parse_presentation("generator x degree zero\n")
    with pytest.raises(ParseError, match="line 3"):
        parse_presentation(
            "generator x degree 2\n# fine\ngenerator x degree 4\n")
    with pytest.raises(ParseError, match="truncat"):
        parse_presentation("generator x degree 3 truncate 4\n")
    with pytest.raises(ParseError, match="truncat"):
        parse_presentation("generator x degree 2 truncate 1\n")


def test_presentation_with_no_generators_builds_the_point():
    alg = load_algebra_text("name empty\n")
    assert alg.dim == 1
    assert alg.degrees == [0]


# --- structure-constant parsing ---

def test_parse_minimal_table():
    alg = parse_structure_constants(MINIMAL_TABLE)
    assert alg.labels == ["1", "x"]
    assert alg.degrees == [0, 2]
    assert alg.unit == 0
    # x*x is omitted, hence zero
    assert not alg.multiply(alg.basis_element(1), alg.basis_element(1))


def test_parse_fractional_coefficients():
    text = MINIMAL_TABLE.replace("1 x = 1*x", "1 x = 1/1*x\nx x = 0")
    alg = parse_structure_constants(text)
    assert alg.products[(0, 1)] == {1: Fraction(1)}


def test_parse_infers_transposes():
    # basis sorts by (degree, exponent vector): 1, i2, i1, i1*i2
    two_torus = torus(2)
    text = serialize_structure_constants(two_torus)
    assert "i2 i1 = -1*i1*i2" in text  # the index-ascending (1, 2) pair
    assert "i1 i2" not in text  # its transpose (2, 1) is left implicit
    parsed = parse_structure_constants(text)
    assert parsed.products == two_torus.products
    assert parsed.products[(1, 2)] == {3: Fraction(-1)}
    assert parsed.products[(2, 1)] == {3: Fraction(1)}


def test_parse_rejects_duplicate_product_lines():
    text = MINIMAL_TABLE + "1 x = 1*x\n"
    with pytest.raises(ParseError, match="duplicate"):
        parse_structure_constants(text)


def test_parse_rejects_unknown_labels():
    with pytest.raises(ParseError, match="unknown"):
        parse_structure_constants(MINIMAL_TABLE.replace("1 x = 1*x",
                                                        "1 y = 1*y"))


def test_parse_rejects_missing_sections():
    with pytest.raises(ParseError, match="unit"):
        parse_structure_constants("basis:\n1 0\n\nproducts:\n1 1 = 1*1\n")


def test_parse_sends_bad_tables_to_validation():
    # drop the unit row entirely: parse succeeds, validation does not
    text = "basis:\n1 0\nx 2\n\nunit: 1\n\nproducts:\n1 x = 1*x\n"
    with pytest.raises(ValidationError) as info:
        parse_structure_constants(text)
    assert any("unit" in v for v in info.value.violations)


def test_explicit_transpose_lines_are_checked_not_inferred():
    prod = tensor(sphere(3), sphere(5))
    text = serialize_structure_constants(prod)
    assert "1⊗x x⊗1 = -1*x⊗x" in text
    # a consistent explicit transpose is accepted ...
    consistent = text + "x⊗1 1⊗x = 1*x⊗x\n"
    assert parse_structure_constants(consistent).products == prod.products
    # ... while an inconsistent one is a commutativity violation
    broken = text + "x⊗1 1⊗x = -1*x⊗x\n"
    with pytest.raises(ValidationError) as info:
        parse_structure_constants(broken)
    assert any("commut" in v for v in info.value.violations)


# --- serialization ---

def test_serializer_round_trips_corpus():
    for name in corpus_names():
        alg = load_algebra_text(corpus_text(name))
        again = parse_structure_constants(serialize_structure_constants(alg))
        assert again.labels == alg.labels
        assert again.degrees == alg.degrees
        assert again.unit == alg.unit
        assert again.products == alg.products


def test_serializer_round_trips_tensor_products():
    for alg in (tensor(projective_space(2), sphere(4)),
                tensor(torus(2), projective_space(1))):
        again = parse_structure_constants(serialize_structure_constants(alg))
        assert again.products == alg.products


def test_serializer_omits_zero_rows():
    text = serialize_structure_constants(sphere(2))
    assert "x x" not in text


# --- the combined loader ---

def test_algebra_file_records_format():
    doc = AlgebraFile(detect_format(MINIMAL_TABLE), MINIMAL_TABLE)
    assert doc.format == "structure_constants"
    assert doc.build().dim == 2
    text = "generator x degree 2 truncate 3\n"
    doc = AlgebraFile(detect_format(text), text)
    assert doc.format == "presentation"
    assert doc.build().dim == 3


def test_load_algebra_text_handles_both_formats():
    from_table = load_algebra_text(MINIMAL_TABLE)
    from_pres = load_algebra_text("generator x degree 2\n")
    assert from_table.degrees == from_pres.degrees == [0, 2]
