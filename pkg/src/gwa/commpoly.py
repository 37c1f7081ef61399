"""K[x, y], the affine automorphism phi and points of K^2."""

from dataclasses import dataclass
from fractions import Fraction

from src.errors import NotInvertible
from src.scalars.fields import FieldContext, Scalar, common_context, lift

Exponent = tuple[int, int]
Coefficient = Scalar | int | Fraction


class CommPoly2:
    """Sum of c_ij * x^i * y^j with nonzero coefficients in one field."""

    __slots__ = ("context", "terms")
    __hash__ = None

    def __init__(self, context: FieldContext, terms: dict[Exponent, Scalar] | None = None) -> None:
        self.context = context
        self.terms: dict[Exponent, Scalar] = {}
        for e, c in (terms or {}).items():
            c = lift(c, context)
            if not c.is_zero():
                self.terms[e] = c

    @classmethod
    def x(cls, context: FieldContext) -> "CommPoly2":
        return cls(context, {(1, 0): context.one()})

    @classmethod
    def y(cls, context: FieldContext) -> "CommPoly2":
        return cls(context, {(0, 1): context.one()})

    @classmethod
    def constant(cls, context: FieldContext, value: Coefficient) -> "CommPoly2":
        return cls(context, {(0, 0): lift(value, context)})

    def _as_poly(self, other: object) -> "CommPoly2":
        if isinstance(other, CommPoly2):
            if other.context != self.context:
                other = CommPoly2(self.context, other.terms)
            return other
        if isinstance(other, (Scalar, int, Fraction)) and not isinstance(other, bool):
            return CommPoly2.constant(self.context, other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        other = self._as_poly(other)
        if other is NotImplemented:
            return other
        result = dict(self.terms)
        for e, c in other.terms.items():
            result[e] = result[e] + c if e in result else c
        return CommPoly2(self.context, result)

    __radd__ = __add__

    def __neg__(self) -> "CommPoly2":
        return CommPoly2(self.context, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._as_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._as_poly(other)
        if other is NotImplemented:
            return other
        result: dict[Exponent, Scalar] = {}
        for (i, j), c in self.terms.items():
            for (k, m), d in other.terms.items():
                e = (i + k, j + m)
                result[e] = result[e] + c * d if e in result else c * d
        return CommPoly2(self.context, result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "CommPoly2":
        if exponent < 0:
            raise ValueError("negative powers are not defined")
        result = CommPoly2.constant(self.context, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        other = self._as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def evaluate(self, x0: Coefficient, y0: Coefficient) -> Scalar:
        """f(x0, y0)."""
        x0, y0 = lift(x0, self.context), lift(y0, self.context)
        total = self.context.zero()
        for (i, j), c in self.terms.items():
            total = total + c * x0**i * y0**j
        return total

    def substitute(self, x_image: "CommPoly2", y_image: "CommPoly2") -> "CommPoly2":
        """f(x_image, y_image)."""
        total = CommPoly2(self.context)
        for (i, j), c in self.terms.items():
            total = total + (x_image**i * y_image**j) * c
        return total

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for (i, j), c in sorted(self.terms.items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0])):
            factors = [
                name if e == 1 else f"{name}^{e}" for name, e in (("x", i), ("y", j)) if e
            ]
            coeff = f"({c.to_text()})" if c.is_compound() else c.to_text()
            if not factors:
                pieces.append(coeff)
            elif c == 1:
                pieces.append("*".join(factors))
            else:
                pieces.append(f"{coeff}*" + "*".join(factors))
        return " + ".join(pieces)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"CommPoly2({self.to_text()})"


@dataclass(frozen=True)
class Point:
    """The maximal ideal <x - s0, y - s1>."""

    s0: Scalar
    s1: Scalar

    def as_text(self) -> tuple[str, str]:
        return (self.s0.to_text(), self.s1.to_text())


@dataclass(frozen=True)
class AffineAuto:
    """phi(x) = y, phi(y) = alpha*y + beta*x + gamma."""

    alpha: Scalar
    beta: Scalar
    gamma: Scalar

    @classmethod
    def of(cls, alpha: Coefficient, beta: Coefficient, gamma: Coefficient) -> "AffineAuto":
        context = common_context(alpha, beta, gamma)
        return cls(lift(alpha, context), lift(beta, context), lift(gamma, context))

    @property
    def context(self) -> FieldContext:
        return common_context(self.alpha, self.beta, self.gamma)

    @property
    def invertible(self) -> bool:
        return not self.beta.is_zero()

    def images(self, context: FieldContext | None = None) -> tuple[CommPoly2, CommPoly2]:
        """(phi(x), phi(y))."""
        context = context or self.context
        x, y = CommPoly2.x(context), CommPoly2.y(context)
        return y, y * self.alpha + x * self.beta + self.gamma

    def inverse_images(self, context: FieldContext | None = None) -> tuple[CommPoly2, CommPoly2]:
        """(phi^-1(x), phi^-1(y)) = ((y - alpha*x - gamma)/beta, x).

        Raises:
            NotInvertible: if beta = 0.
        """
        if not self.invertible:
            raise NotInvertible("phi is not invertible when beta = 0")
        context = context or self.context
        x, y = CommPoly2.x(context), CommPoly2.y(context)
        return (y - x * self.alpha - self.gamma) * self.beta.inv(), x

    def step(self, point: Point) -> Point:
        """(s_n, s_{n+1}) -> (s_{n+1}, alpha*s_{n+1} + beta*s_n + gamma)."""
        return Point(point.s1, self.alpha * point.s1 + self.beta * point.s0 + self.gamma)


def phi_apply(phi: AffineAuto, f: CommPoly2, power: int = 1) -> CommPoly2:
    """phi^power(f) by repeated substitution; negative powers use phi^-1.

    Raises:
        NotInvertible: if power < 0 and beta = 0.
    """
    context = common_context(f.context.one(), phi.alpha, phi.beta, phi.gamma)
    f = CommPoly2(context, f.terms)
    x_image, y_image = phi.images(context) if power >= 0 else phi.inverse_images(context)
    for _ in range(abs(power)):
        f = f.substitute(x_image, y_image)
    return f
