"""Finite-dimensional graded-commutative algebras over Q.

An algebra is a finite homogeneous basis plus a sparse structure-constant
table for the product.  Builders cover monomial presentations (truncated
polynomial generators in even degree, exterior generators in odd degree)
and tensor products with Koszul signs.  The table itself is plain data;
validate() re-derives every axiom from it, so no sign or degree rule is
trusted without being checkable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian


@dataclass(frozen=True)
class Generator:
    symbol: str
    degree: int
    truncation: int = 2


@dataclass(frozen=True)
class Presentation:
    """Monomial presentation.  Each generator g of degree d contributes
    powers 1, g, ..., g^(truncation-1); odd-degree generators square to
    zero and therefore must truncate at 2."""

    name: str
    generators: tuple[Generator, ...]


class Element:
    """Sparse rational linear combination of basis vectors.

    Keys are basis indices, zero coefficients are dropped on construction,
    and equality is coefficientwise.  Elements are algebra-agnostic; the
    product lives on GradedAlgebra.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        data = {}
        if coeffs:
            for i, c in coeffs.items():
                c = Fraction(c)
                if c:
                    data[int(i)] = c
        self.coeffs = data

    def coeff(self, i):
        return self.coeffs.get(i, Fraction(0))

    def items(self):
        return sorted(self.coeffs.items())

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __add__(self, other):
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = out.get(i, Fraction(0)) + c
        return Element(out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = out.get(i, Fraction(0)) - c
        return Element(out)

    def __neg__(self):
        return Element({i: -c for i, c in self.coeffs.items()})

    def __mul__(self, scalar):
        return Element({i: c * Fraction(scalar) for i, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __repr__(self):
        return f"Element({dict(self.items())!r})"


class GradedAlgebra:
    """Graded-commutative algebra given by labels, degrees, the unit index,
    and a structure-constant table.

    products maps an ordered index pair (i, j) to {k: coefficient}; pairs
    absent from the table multiply to zero.  The constructor normalizes the
    table (exact Fractions, zero suppression) but deliberately does not
    check axioms, so corrupt tables stay representable for validate().
    """

    def __init__(self, labels, degrees, unit, products, name=""):
        self.labels = list(labels)
        self.degrees = [int(d) for d in degrees]
        self.unit = int(unit)
        self.name = name
        table = {}
        for (i, j), terms in products.items():
            cleaned = {}
            for k, c in terms.items():
                c = Fraction(c)
                if c:
                    cleaned[int(k)] = c
            if cleaned:
                table[(int(i), int(j))] = cleaned
        self.products = table
        by_degree = {}
        for i, d in enumerate(self.degrees):
            by_degree.setdefault(d, []).append(i)
        self._by_degree = by_degree

    @property
    def dim(self):
        return len(self.labels)

    @property
    def top_degree(self):
        return max(self.degrees) if self.degrees else 0

    def graded_piece(self, n):
        """Basis indices of degree n, ascending; empty list if none."""
        return list(self._by_degree.get(n, []))

    def basis_element(self, i):
        return Element({i: 1})

    def multiply(self, u, v):
        """Bilinear extension of the structure-constant table."""
        out = {}
        for i, cu in u.coeffs.items():
            for j, cv in v.coeffs.items():
                terms = self.products.get((i, j))
                if not terms:
                    continue
                cc = cu * cv
                for k, c in terms.items():
                    out[k] = out.get(k, Fraction(0)) + cc * c
        return Element(out)

    def format_element(self, elt):
        if not elt:
            return "0"
        parts = []
        for i, c in elt.items():
            if i == self.unit:
                parts.append(str(c))
            elif c == 1:
                parts.append(self.labels[i])
            elif c == -1:
                parts.append("-" + self.labels[i])
            else:
                parts.append(f"{c}*{self.labels[i]}")
        text = parts[0]
        for t in parts[1:]:
            text += " - " + t[1:] if t.startswith("-") else " + " + t
        return text

    def __eq__(self, other):
        if not isinstance(other, GradedAlgebra):
            return NotImplemented
        return (
            self.labels == other.labels
            and self.degrees == other.degrees
            and self.unit == other.unit
            and self.products == other.products
        )

    def __repr__(self):
        tag = self.name or f"{self.dim} basis elements"
        return f"GradedAlgebra({tag}, top degree {self.top_degree})"

    def validate(self):
        """Exhaustive axiom check; returns a list of violation strings.

        Checks degree additivity of every table entry, both unit laws,
        graded commutativity products(j,i) = (-1)^(|i||j|) products(i,j),
        and associativity on all basis triples.
        """
        out = []
        dim = self.dim
        for (i, j), terms in sorted(self.products.items()):
            want = self.degrees[i] + self.degrees[j]
            for k in sorted(terms):
                if self.degrees[k] != want:
                    out.append(
                        f"degree additivity: {self.labels[i]} * {self.labels[j]} "
                        f"hits {self.labels[k]} of degree {self.degrees[k]}, expected {want}"
                    )
        u = self.unit
        one = Fraction(1)
        for j in range(dim):
            if self.products.get((u, j), {}) != {j: one}:
                out.append(f"unit law: 1 * {self.labels[j]} != {self.labels[j]}")
            if j != u and self.products.get((j, u), {}) != {j: one}:
                out.append(f"unit law: {self.labels[j]} * 1 != {self.labels[j]}")
        for i in range(dim):
            for j in range(i, dim):
                sign = -1 if (self.degrees[i] * self.degrees[j]) % 2 else 1
                mirror = {k: sign * c for k, c in self.products.get((i, j), {}).items()}
                if self.products.get((j, i), {}) != mirror:
                    rel = "-" if sign < 0 else ""
                    out.append(
                        f"graded commutativity: {self.labels[j]} * {self.labels[i]} "
                        f"!= {rel}({self.labels[i]} * {self.labels[j]})"
                    )
        for i in range(dim):
            ei = self.basis_element(i)
            for j in range(dim):
                left = self.multiply(ei, self.basis_element(j))
                for k in range(dim):
                    ek = self.basis_element(k)
                    lhs = self.multiply(left, ek)
                    rhs = self.multiply(ei, self.multiply(self.basis_element(j), ek))
                    if lhs != rhs:
                        out.append(
                            f"associativity: ({self.labels[i]} * {self.labels[j]}) * {self.labels[k]} "
                            f"!= {self.labels[i]} * ({self.labels[j]} * {self.labels[k]})"
                        )
        return out


def _check_presentation(p):
    seen = set()
    for g in p.generators:
        if g.symbol in seen:
            raise ValueError(f"duplicate generator symbol {g.symbol!r}")
        seen.add(g.symbol)
        if g.degree < 1:
            raise ValueError(f"generator {g.symbol!r} must have positive degree")
        if g.truncation < 2:
            raise ValueError(f"generator {g.symbol!r} needs truncation >= 2")
        if g.degree % 2 and g.truncation != 2:
            raise ValueError(f"odd-degree generator {g.symbol!r} must truncate at 2")


def _monomial_label(exps, gens):
    parts = []
    for e, g in zip(exps, gens):
        if e == 1:
            parts.append(g.symbol)
        elif e > 1:
            parts.append(f"{g.symbol}^{e}")
    return "*".join(parts) if parts else "1"


def _sort_sign(first, second, odd):
    # Sign from sorting the concatenated word g^first . g^second back into
    # generator order: each odd letter of the second block walks past the
    # odd letters of higher generators in the first block.
    t = 0
    for i in range(len(odd)):
        if odd[i] and second[i]:
            t += second[i] * sum(first[j] for j in range(i + 1, len(odd)) if odd[j])
    return -1 if t % 2 else 1


def build_monomial_algebra(p):
    """Build the algebra of a monomial presentation.

    Basis: all exponent vectors below the truncations, sorted by (degree,
    exponent vector).  Products add exponents, vanish when any exponent
    reaches its truncation, and pick up the Koszul sign of sorting odd
    factors.  The result carries two extra attributes used by model
    builders: monomial_exponents (exponent vector per basis index) and
    presentation.
    """
    _check_presentation(p)
    gens = list(p.generators)
    odd = [g.degree % 2 == 1 for g in gens]
    degrees_of = lambda e: sum(x * g.degree for x, g in zip(e, gens))
    exps = sorted(cartesian(*(range(g.truncation) for g in gens)),
                  key=lambda e: (degrees_of(e), e))
    index_of = {e: i for i, e in enumerate(exps)}
    labels = [_monomial_label(e, gens) for e in exps]
    degrees = [degrees_of(e) for e in exps]
    products = {}
    for i, e in enumerate(exps):
        for j, f in enumerate(exps):
            total = tuple(a + b for a, b in zip(e, f))
            if any(t >= g.truncation for t, g in zip(total, gens)):
                continue
            sign = _sort_sign(e, f, odd)
            products[(i, j)] = {index_of[total]: Fraction(sign)}
    alg = GradedAlgebra(labels, degrees, index_of[tuple(0 for _ in gens)],
                        products, name=p.name)
    alg.monomial_exponents = exps
    alg.presentation = p
    return alg


def tensor(a, b, name=None):
    """Tensor product with the Koszul sign rule
    (x (x) w) * (y (x) h) = (-1)^(|w| |y|) (x y) (x) (w h).

    Basis pairs are flattened row-major: (i, j) -> i * b.dim + j, so
    iterated tensors have literally identical structure constants under the
    flat index identification.
    """
    dim_b = b.dim
    labels = [f"{la}⊗{lb}" for la in a.labels for lb in b.labels]
    degrees = [da + db for da in a.degrees for db in b.degrees]
    products = {}
    for (i1, i2), aterms in a.products.items():
        for (j1, j2), bterms in b.products.items():
            sign = -1 if (b.degrees[j1] * a.degrees[i2]) % 2 else 1
            key = (i1 * dim_b + j1, i2 * dim_b + j2)
            entry = products.setdefault(key, {})
            for k1, c1 in aterms.items():
                for k2, c2 in bterms.items():
                    k = k1 * dim_b + k2
                    entry[k] = entry.get(k, Fraction(0)) + sign * c1 * c2
    if name is None and a.name and b.name:
        name = f"{a.name}x{b.name}"
    return GradedAlgebra(labels, degrees, a.unit * dim_b + b.unit, products,
                         name=name or "")


def _dense(a, elt):
    row = [Fraction(0)] * a.dim
    for i, c in elt.coeffs.items():
        row[i] = c
    return row


def subalgebra_generated(a, seed):
    """Echelonized basis of the smallest unital subalgebra containing seed.

    Iterates span <- span + span . span until the dimension stops growing,
    echelonizing with rref at each step, so the returned Elements are the
    canonical reduced basis of the subalgebra.
    """
    from .linalg import rref

    rows = [_dense(a, a.basis_element(a.unit))]
    rows.extend(_dense(a, s) for s in seed)
    reduced, rank, _ = rref(rows)
    span = reduced[:rank]
    while True:
        candidates = list(span)
        for r1 in span:
            e1 = Element({i: c for i, c in enumerate(r1) if c})
            for r2 in span:
                e2 = Element({i: c for i, c in enumerate(r2) if c})
                candidates.append(_dense(a, a.multiply(e1, e2)))
        reduced, new_rank, _ = rref(candidates)
        if new_rank == rank:
            break
        span = reduced[:new_rank]
        rank = new_rank
    return [Element({i: c for i, c in enumerate(row) if c}) for row in span]
