"""Bounded-degree kernels K = {f : r*f in z*S} by exact linear algebra.

Membership r*f in z*S is decided by right division of r*f by z: the
remainder is unique and linear in f, so the kernel in degree <= bound is the
null space of f -> remainder(r*f) on the span of normal words.
"""

from dataclasses import dataclass

from loguru import logger

from src.errors import ZeroPolynomial
from src.ideals.division import RightIdealGens, right_divide
from src.pbw.ncpoly import Monomial, NcPoly, deglex_key
from src.scalars.linalg import SparseRow, rank, row_reduce, solve_sparse_system


@dataclass(frozen=True)
class KernelBasis:
    """Echelon basis of {f : deg f <= degree_bound, r*f in z*S}.

    Basis elements have pairwise distinct, monic leading monomials and come
    in ascending deglex order of those; cofactors[i] is the q with
    r*basis[i] = z*q.
    """

    r: NcPoly
    z: str
    degree_bound: int
    basis: tuple[NcPoly, ...]
    cofactors: tuple[NcPoly, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def contains(self, f: NcPoly) -> bool:
        """Span membership by elimination against the echelon basis."""
        rest = f
        for element in reversed(self.basis):
            coeff = rest.coefficient(element.leading_monomial())
            if not coeff.is_zero():
                rest = rest - element.scale(coeff)
        return rest.is_zero()


def kernel_ideal_basis(r: NcPoly, z: str, bound: int) -> KernelBasis:
    """Exact basis of the degree <= bound part of {f : r*f in z*S}.

    Raises:
        ZeroPolynomial: if r is zero.
        PresentationMismatch: if z is not a generator.
        ValueError: if bound is negative.
    """
    if r.is_zero():
        raise ZeroPolynomial("r must be nonzero")
    if bound < 0:
        raise ValueError("degree bound must be non-negative")
    presentation = r.presentation
    divisor = RightIdealGens([presentation.generator(z)])
    # column 0 holds the deglex-largest word so echelon pivots are leading monomials
    words = list(reversed(presentation.words(bound)))
    rows: dict[Monomial, SparseRow] = {}
    quotients: list[NcPoly] = []
    for column, word in enumerate(words):
        result = right_divide(r * presentation.monomial(word), divisor)
        quotients.append(result.quotients[0])
        for monomial, coeff in result.remainder.terms.items():
            rows.setdefault(monomial, {})[column] = coeff
    logger.debug(f"kernel system: {len(rows)} equations in {len(words)} unknowns")
    solution = solve_sparse_system(list(rows.values()), len(words), None, presentation.context)
    vectors = [
        {column: value for column, value in enumerate(vector) if not value.is_zero()}
        for vector in solution.nullspace
    ]
    reduced, pivots = row_reduce(vectors, len(words))
    basis, cofactors = [], []
    for row in reduced[: len(pivots)]:
        f, q = presentation.zero(), presentation.zero()
        for column, value in row.items():
            f = f + presentation.monomial(words[column], value)
            q = q + quotients[column].scale(value)
        basis.append(f)
        cofactors.append(q)
    order = sorted(range(len(basis)), key=lambda i: deglex_key(basis[i].leading_monomial()))
    logger.info(f"kernel of r = {r} modulo {z}*S at bound {bound}: dimension {len(basis)}")
    return KernelBasis(
        r,
        z,
        bound,
        tuple(basis[i] for i in order),
        tuple(cofactors[i] for i in order),
    )


def generated_dimension(gens: RightIdealGens, bound: int) -> int:
    """dim of the span of g*m over generators g and words m with deg g + deg m <= bound."""
    presentation = gens.presentation
    columns: dict[Monomial, int] = {}
    rows: list[SparseRow] = []
    for g in gens:
        for word in presentation.words(bound - g.degree()):
            product = g * presentation.monomial(word)
            rows.append(
                {columns.setdefault(m, len(columns)): c for m, c in product.terms.items()}
            )
    return rank(rows, len(columns))
