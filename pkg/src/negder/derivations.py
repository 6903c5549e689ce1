"""Derivations of graded algebras and the class-H membership check.

A derivation of degree d satisfies the Koszul-signed Leibniz law

    theta(u v) = theta(u) v + (-1)^(d |u|) u theta(v).

The solver knows nothing about generators: theta's value on every basis
element is an unknown and the law is imposed on every ordered basis pair,
so it works for any valid structure-constant table.  Solution spaces come
back as the canonical kernel basis of that linear system, reshaped into
per-degree blocks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Element
from .linalg import nullspace_basis


def _sign(exponent):
    return -1 if exponent % 2 else 1


class GradedLinearMap:
    """Degree-homogeneous linear self-map, stored as one matrix per source
    degree.  The block for source degree n has rows indexed by
    graded_piece(n + shift) and columns by graded_piece(n).  All-zero and
    empty blocks are dropped, so a map is zero iff it stores no blocks."""

    __slots__ = ("shift", "blocks")

    def __init__(self, shift, blocks=None):
        self.shift = int(shift)
        cleaned = {}
        for n, mat in (blocks or {}).items():
            rows = [[Fraction(x) for x in row] for row in mat]
            if rows and rows[0] and any(any(row) for row in rows):
                cleaned[int(n)] = rows
        self.blocks = cleaned

    def is_zero(self):
        return not self.blocks

    def __eq__(self, other):
        if not isinstance(other, GradedLinearMap):
            return NotImplemented
        return self.shift == other.shift and self.blocks == other.blocks

    def __repr__(self):
        return f"GradedLinearMap(shift={self.shift}, blocks={sorted(self.blocks)})"

    def apply(self, algebra, elt):
        """Image of elt; degrees without a stored block map to zero."""
        by_degree = {}
        for i, c in elt.coeffs.items():
            by_degree.setdefault(algebra.degrees[i], {})[i] = c
        out = {}
        for n, coeffs in by_degree.items():
            mat = self.blocks.get(n)
            if mat is None:
                continue
            src = algebra.graded_piece(n)
            tgt = algebra.graded_piece(n + self.shift)
            assert len(mat) == len(tgt) and len(mat[0]) == len(src)
            col = [coeffs.get(i, Fraction(0)) for i in src]
            for r, t in enumerate(tgt):
                val = sum((m * c for m, c in zip(mat[r], col)), Fraction(0))
                if val:
                    out[t] = out.get(t, Fraction(0)) + val
        return Element(out)

    def scaled(self, scalar):
        scalar = Fraction(scalar)
        return GradedLinearMap(
            self.shift,
            {n: [[scalar * x for x in row] for row in mat]
             for n, mat in self.blocks.items()},
        )

    @classmethod
    def from_images(cls, algebra, shift, images):
        """Assemble a map from basis images {index: Element}; omitted
        indices map to zero.  Each image must live in the shifted piece."""
        zero = Element()
        blocks = {}
        for n in sorted(set(algebra.degrees)):
            src = algebra.graded_piece(n)
            tgt = algebra.graded_piece(n + shift)
            tgt_set = set(tgt)
            if not tgt:
                for i in src:
                    assert not images.get(i, zero), "image lands in an empty piece"
                continue
            mat = []
            for t in tgt:
                mat.append([images.get(i, zero).coeff(t) for i in src])
            for i in src:
                img = images.get(i, zero)
                assert set(img.coeffs) <= tgt_set, "image off the shifted piece"
            blocks[n] = mat
        return cls(shift, blocks)


def identity_map(algebra):
    return GradedLinearMap.from_images(
        algebra, 0, {i: algebra.basis_element(i) for i in range(algebra.dim)})


def leibniz_system(a, d):
    """Linear system whose kernel is the space of degree-d derivations.

    Unknowns: pairs (i, t) meaning the coefficient of basis t in theta(e_i),
    enumerated with i ascending and t in graded-piece order.  Rows: for
    every ordered basis pair (i, j) and every basis element of the target
    degree |i| + |j| + d, the Leibniz law written as LHS - RHS = 0.
    Returns (rows, unknowns).
    """
    unknowns = []
    for i in range(a.dim):
        for t in a.graded_piece(a.degrees[i] + d):
            unknowns.append((i, t))
    col = {ut: c for c, ut in enumerate(unknowns)}
    ncols = len(unknowns)
    rows = []
    for i in range(a.dim):
        di = a.degrees[i]
        sign = _sign(d * di)
        for j in range(a.dim):
            targets = a.graded_piece(di + a.degrees[j] + d)
            if not targets:
                continue
            eq = {t: [Fraction(0)] * ncols for t in targets}
            for k, c in a.products.get((i, j), {}).items():
                for t in targets:
                    eq[t][col[(k, t)]] += c
            for t1 in a.graded_piece(di + d):
                for k2, c in a.products.get((t1, j), {}).items():
                    eq[k2][col[(i, t1)]] -= c
            for t2 in a.graded_piece(a.degrees[j] + d):
                for k2, c in a.products.get((i, t2), {}).items():
                    eq[k2][col[(j, t2)]] -= sign * c
            rows.extend(eq[t] for t in targets)
    return rows, unknowns


def derivation_space(a, d):
    """Canonical basis of the space of degree-d derivations of a.

    Each kernel vector of the Leibniz system becomes one GradedLinearMap;
    the list is empty exactly when only the zero derivation exists.
    """
    rows, unknowns = leibniz_system(a, d)
    if not unknowns:
        return []
    kernel = nullspace_basis(rows, ncols=len(unknowns))
    maps = []
    for v in kernel:
        images = {}
        for (i, t), c in zip(unknowns, v):
            if c:
                images.setdefault(i, {})[t] = c
        maps.append(GradedLinearMap.from_images(
            a, d, {i: Element(img) for i, img in images.items()}))
    return maps


def is_derivation(a, m):
    """Exact Leibniz residual of m over every ordered basis pair.

    Returns a list of ((i, j), defect Element) entries for the violated
    pairs; an empty list means m is a derivation.
    """
    out = []
    images = [m.apply(a, a.basis_element(i)) for i in range(a.dim)]
    for i in range(a.dim):
        ei = a.basis_element(i)
        sign = _sign(m.shift * a.degrees[i])
        for j in range(a.dim):
            ej = a.basis_element(j)
            defect = (m.apply(a, a.multiply(ei, ej))
                      - a.multiply(images[i], ej)
                      - sign * a.multiply(ei, images[j]))
            if defect:
                out.append(((i, j), defect))
    return out


def bracket(a, m1, m2):
    """Graded commutator [m1, m2] = m1 m2 - (-1)^(d1 d2) m2 m1, a map of
    shift d1 + d2 (a derivation whenever both inputs are)."""
    sign = _sign(m1.shift * m2.shift)
    images = {}
    for i in range(a.dim):
        e = a.basis_element(i)
        img = m1.apply(a, m2.apply(a, e)) - sign * m2.apply(a, m1.apply(a, e))
        if img:
            images[i] = img
    return GradedLinearMap.from_images(a, m1.shift + m2.shift, images)


@dataclass
class ClassHVerdict:
    """Outcome of the negative-degree derivation sweep.

    in_class is certificate-backed: it is False exactly when a nonzero
    negative-degree derivation exists in the checked range, and then
    certificate holds (degree, first canonical basis derivation) at the
    least negative failing degree.  connectivity_ok reports separately
    whether the degree-0 piece is the unit line and degree 1 is empty.
    """

    in_class: bool
    connectivity_ok: bool
    certificate: tuple[int, GradedLinearMap] | None
    dimensions: dict[int, int] = field(default_factory=dict)


def check_class_h(a, max_degree=None):
    """Sweep derivation degrees -1, -2, ... down to -max_degree (default:
    the top degree, below which every space is empty for degree reasons)
    and stop at the first nonzero space."""
    depth = a.top_degree if max_degree is None else int(max_degree)
    connectivity_ok = a.graded_piece(0) == [a.unit] and not a.graded_piece(1)
    dimensions = {}
    certificate = None
    for k in range(1, depth + 1):
        space = derivation_space(a, -k)
        dimensions[-k] = len(space)
        if space:
            certificate = (-k, space[0])
            break
    return ClassHVerdict(
        in_class=certificate is None,
        connectivity_ok=connectivity_ok,
        certificate=certificate,
        dimensions=dimensions,
    )
