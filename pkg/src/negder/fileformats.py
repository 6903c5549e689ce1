"""Text formats for algebra files.

Two formats share the .alg suffix and are told apart by their first
meaningful line.  '#' starts a comment anywhere, blank lines are ignored.

Presentation format (first directive is name or generator):

    name CP2
    generator x degree 2 truncate 3

Odd-degree generators may omit the truncation, which defaults to 2 (it is
also the only legal value for them); even-degree generators default to 2
as well.

Structure-constant format (first directive is basis:):

    basis:
    1 0
    x 2
    unit: 1
    products:
    1 1 = 1*1
    1 x = 1*x

Coefficients are exact rationals, "p/q" or an integer.  Product lines may
be given for i <= j in basis order only; the transposed entries then
follow from graded commutativity.  Omitted pairs are zero.  A parsed
table is validated before use and rejected with the full violation list
if any axiom fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Generator, GradedAlgebra, Presentation, build_monomial_algebra

_RESERVED = set("=+#")

PRESENTATION = "presentation"
STRUCTURE_CONSTANTS = "structure_constants"


class ParseError(ValueError):
    def __init__(self, line_no, message):
        prefix = f"line {line_no}: " if line_no else ""
        super().__init__(prefix + message)
        self.line_no = line_no


class ValidationError(ValueError):
    """A structurally parseable table that breaks the algebra axioms."""

    def __init__(self, violations):
        super().__init__("\n".join(violations))
        self.violations = list(violations)


def _meaningful_lines(text):
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line_no, line


def detect_format(text):
    for line_no, line in _meaningful_lines(text):
        head = line.split()[0]
        if head in ("name", "generator"):
            return PRESENTATION
        if head in ("basis:", "unit:", "products:"):
            return STRUCTURE_CONSTANTS
        raise ParseError(line_no, f"unrecognized directive {head!r}")
    raise ParseError(0, "empty input")


def _int(token, line_no, what):
    try:
        return int(token)
    except ValueError:
        raise ParseError(line_no, f"{what} must be an integer, got {token!r}") from None


def parse_presentation(text):
    name = ""
    gens = []
    seen = set()
    for line_no, line in _meaningful_lines(text):
        words = line.split()
        if words[0] == "name":
            if len(words) < 2:
                raise ParseError(line_no, "name needs a value")
            name = " ".join(words[1:])
        elif words[0] == "generator":
            if len(words) not in (4, 6) or words[2] != "degree":
                raise ParseError(
                    line_no,
                    "expected: generator <symbol> degree <n> [truncate <m>]")
            symbol = words[1]
            degree = _int(words[3], line_no, "degree")
            truncation = 2
            if len(words) == 6:
                if words[4] != "truncate":
                    raise ParseError(line_no, f"expected 'truncate', got {words[4]!r}")
                truncation = _int(words[5], line_no, "truncation")
            if symbol in seen:
                raise ParseError(line_no, f"duplicate generator symbol {symbol!r}")
            seen.add(symbol)
            if degree < 1:
                raise ParseError(line_no, "generator degree must be positive")
            if truncation < 2:
                raise ParseError(line_no, "truncation must be at least 2")
            if degree % 2 and truncation != 2:
                raise ParseError(
                    line_no, f"odd-degree generator {symbol!r} must truncate at 2")
            gens.append(Generator(symbol, degree, truncation))
        else:
            raise ParseError(line_no, f"unknown directive {words[0]!r}")
    return Presentation(name, tuple(gens))


def _check_label(label, line_no):
    if label == "0" or _RESERVED & set(label):
        raise ParseError(line_no, f"illegal basis label {label!r}")


def _parse_terms(rhs, line_no, label_index):
    if rhs.strip() == "0":
        return {}
    terms = {}
    for part in rhs.split("+"):
        part = part.strip()
        if "*" not in part:
            raise ParseError(line_no, f"expected <coeff>*<label>, got {part!r}")
        coeff_text, label = part.split("*", 1)
        try:
            coeff = Fraction(coeff_text)
        except (ValueError, ZeroDivisionError):
            raise ParseError(line_no, f"bad coefficient {coeff_text!r}") from None
        if label not in label_index:
            raise ParseError(line_no, f"unknown basis label {label!r}")
        k = label_index[label]
        terms[k] = terms.get(k, Fraction(0)) + coeff
    return terms


def parse_structure_constants(text):
    labels = []
    degrees = []
    label_index = {}
    unit_label = None
    product_lines = []
    section = None
    for line_no, line in _meaningful_lines(text):
        if line == "basis:":
            section = "basis"
            continue
        if line == "products:":
            section = "products"
            continue
        if line.startswith("unit:"):
            unit_label = line[len("unit:"):].strip()
            if not unit_label:
                raise ParseError(line_no, "unit needs a basis label")
            continue
        if section == "basis":
            words = line.split()
            if len(words) != 2:
                raise ParseError(line_no, "expected: <label> <degree>")
            label, degree = words[0], _int(words[1], line_no, "degree")
            _check_label(label, line_no)
            if label in label_index:
                raise ParseError(line_no, f"duplicate basis label {label!r}")
            if degree < 0:
                raise ParseError(line_no, "degrees must be nonnegative")
            label_index[label] = len(labels)
            labels.append(label)
            degrees.append(degree)
        elif section == "products":
            if "=" not in line:
                raise ParseError(line_no, "expected: <i> <j> = <coeff>*<k> [+ ...]")
            left, rhs = line.split("=", 1)
            words = left.split()
            if len(words) != 2:
                raise ParseError(line_no, "expected two basis labels before '='")
            product_lines.append((line_no, words[0], words[1], rhs))
        else:
            raise ParseError(line_no, "line outside any section")
    if not labels:
        raise ParseError(0, "no basis section")
    if unit_label is None:
        raise ParseError(0, "no unit line")
    if unit_label not in label_index:
        raise ParseError(0, f"unit label {unit_label!r} is not in the basis")
    products = {}
    for line_no, il, jl, rhs in product_lines:
        for lab in (il, jl):
            if lab not in label_index:
                raise ParseError(line_no, f"unknown basis label {lab!r}")
        key = (label_index[il], label_index[jl])
        if key in products:
            raise ParseError(line_no, f"duplicate product line for {il} {jl}")
        products[key] = _parse_terms(rhs, line_no, label_index)
    # Fill in the transposed pairs by graded commutativity.
    for (i, j), terms in sorted(products.items()):
        if (j, i) not in products:
            sign = -1 if (degrees[i] * degrees[j]) % 2 else 1
            products[(j, i)] = {k: sign * c for k, c in terms.items()}
    alg = GradedAlgebra(labels, degrees, label_index[unit_label], products)
    violations = alg.validate()
    if violations:
        raise ValidationError(violations)
    return alg


def serialize_structure_constants(a):
    """Canonical structure-constant text: basis in index order, then the
    unit, then each nonzero product with i <= j, terms ordered by index.
    parse(serialize(a)) reproduces basis order, degrees, unit and table."""
    lines = ["basis:"]
    for label, d in zip(a.labels, a.degrees):
        lines.append(f"{label} {d}")
    lines.append(f"unit: {a.labels[a.unit]}")
    lines.append("products:")
    for i in range(a.dim):
        for j in range(i, a.dim):
            terms = a.products.get((i, j))
            if not terms:
                continue
            body = " + ".join(f"{c}*{a.labels[k]}" for k, c in sorted(terms.items()))
            lines.append(f"{a.labels[i]} {a.labels[j]} = {body}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class AlgebraFile:
    """An algebra source text together with its detected format."""

    format: str
    payload: str

    def build(self):
        if self.format == PRESENTATION:
            return build_monomial_algebra(parse_presentation(self.payload))
        if self.format == STRUCTURE_CONSTANTS:
            return parse_structure_constants(self.payload)
        raise ValueError(f"unknown format {self.format!r}")


def load_algebra_text(text):
    """Detect the format, parse, build, and (for tables) validate."""
    return AlgebraFile(detect_format(text), text).build()
