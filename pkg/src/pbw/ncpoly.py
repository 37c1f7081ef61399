"""Noncommutative polynomials in PBW normal form."""

from fractions import Fraction
from typing import TYPE_CHECKING

from src.errors import FieldMismatch, PresentationMismatch, ZeroPolynomial
from src.scalars.fields import Scalar

if TYPE_CHECKING:
    from src.pbw.presentation import Presentation

Monomial = tuple[int, ...]


def deglex_key(monomial: Monomial) -> tuple[int, ...]:
    """Sort key: total degree, then exponents from the highest generator down."""
    return (sum(monomial), *reversed(monomial))


def divides(small: Monomial, big: Monomial) -> bool:
    return all(a <= b for a, b in zip(small, big))


def accumulate(target: dict[Monomial, Scalar], monomial: Monomial, coeff: Scalar) -> None:
    """target[monomial] += coeff, removing the entry when it cancels."""
    current = target.get(monomial)
    if current is None:
        if not coeff.is_zero():
            target[monomial] = coeff
        return
    total = current + coeff
    if total.is_zero():
        del target[monomial]
    else:
        target[monomial] = total


class NcPoly:
    """Element of a PBW algebra: a map from normal words to nonzero Scalars."""

    __slots__ = ("presentation", "terms")
    __hash__ = None

    def __init__(
        self,
        presentation: "Presentation",
        terms: dict[Monomial, Scalar] | None = None,
    ) -> None:
        self.presentation = presentation
        self.terms: dict[Monomial, Scalar] = {
            m: c for m, c in (terms or {}).items() if not c.is_zero()
        }

    def _same(self, other: "NcPoly") -> None:
        if other.presentation is not self.presentation:
            raise PresentationMismatch(
                f"{self.presentation.name} vs {other.presentation.name}"
            )

    def _as_poly(self, other: object) -> "NcPoly":
        if isinstance(other, NcPoly):
            self._same(other)
            return other
        if isinstance(other, (Scalar, int, Fraction)) and not isinstance(other, bool):
            return self.presentation.scalar(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other):
        other = self._as_poly(other)
        if other is NotImplemented:
            return other
        result = dict(self.terms)
        for m, c in other.terms.items():
            accumulate(result, m, c)
        return NcPoly(self.presentation, result)

    __radd__ = __add__

    def __neg__(self) -> "NcPoly":
        return NcPoly(self.presentation, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._as_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._as_poly(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, coeff: Scalar | int | Fraction) -> "NcPoly":
        coeff = self.presentation.context.coerce(coeff)
        return NcPoly(self.presentation, {m: c * coeff for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NcPoly):
            return nc_mul(self, other)
        if isinstance(other, (Scalar, int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        # scalars are central
        if isinstance(other, (Scalar, int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (Scalar, int, Fraction)) and not isinstance(other, bool):
            return self.scale(1 / self.presentation.context.coerce(other))
        return NotImplemented

    def __pow__(self, exponent: int) -> "NcPoly":
        if exponent < 0:
            raise ValueError("negative powers are not defined")
        result = self.presentation.one()
        for _ in range(exponent):
            result = nc_mul(result, self)
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, NcPoly):
            return other.presentation is self.presentation and other.terms == self.terms
        if isinstance(other, (Scalar, int, Fraction)) and not isinstance(other, bool):
            try:
                other = self.presentation.scalar(other)
            except FieldMismatch:
                return False
            return other.terms == self.terms
        return NotImplemented

    def sorted_terms(self) -> list[tuple[Monomial, Scalar]]:
        """Terms in descending deglex order."""
        return sorted(self.terms.items(), key=lambda t: deglex_key(t[0]), reverse=True)

    def leading(self) -> tuple[Monomial, Scalar]:
        """Deglex-maximal monomial and its coefficient.

        Raises:
            ZeroPolynomial: for the zero polynomial.
        """
        if not self.terms:
            raise ZeroPolynomial("the zero polynomial has no leading term")
        monomial = max(self.terms, key=deglex_key)
        return monomial, self.terms[monomial]

    def leading_monomial(self) -> Monomial:
        return self.leading()[0]

    def leading_coefficient(self) -> Scalar:
        return self.leading()[1]

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def max_exponent(self, symbol: str) -> int:
        index = self.presentation.index(symbol)
        return max((m[index] for m in self.terms), default=0)

    def coefficient(self, monomial: Monomial) -> Scalar:
        return self.terms.get(monomial, self.presentation.context.zero())

    def to_text(self) -> str:
        """Canonical text, terms in descending deglex order."""
        if not self.terms:
            return "0"
        pieces: list[str] = []
        only = len(self.terms) == 1
        for monomial, coeff in self.sorted_terms():
            word = self.presentation.word_text(monomial)
            if not any(monomial):
                text = coeff.to_text()
                if coeff.is_compound() and not only:
                    text = f"({text})"
            elif coeff == 1:
                text = word
            elif coeff == -1:
                text = f"-{word}"
            else:
                coeff_text = coeff.to_text()
                if coeff.is_compound():
                    coeff_text = f"({coeff_text})"
                text = f"{coeff_text}*{word}"
            if not pieces:
                pieces.append(text)
            elif text.startswith("-"):
                pieces.append(f" - {text[1:]}")
            else:
                pieces.append(f" + {text}")
        return "".join(pieces)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"NcPoly[{self.presentation.name}]({self.to_text()})"


def nc_mul(f: NcPoly, g: NcPoly) -> NcPoly:
    """Normal form of f*g.

    Raises:
        PresentationMismatch: if f and g belong to different presentations.
    """
    f._same(g)
    presentation = f.presentation
    result: dict[Monomial, Scalar] = {}
    for m1, c1 in f.terms.items():
        for m2, c2 in g.terms.items():
            coeff = c1 * c2
            for m, c in presentation.multiply_words(m1, m2).items():
                accumulate(result, m, coeff * c)
    return NcPoly(presentation, result)


def leading(f: NcPoly) -> tuple[Monomial, Scalar]:
    return f.leading()
