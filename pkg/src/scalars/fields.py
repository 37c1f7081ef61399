"""Exact coefficient fields: QQ, QQ(sqrt(d)) and QQ(lambda, mu)."""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import StrEnum, auto
from fractions import Fraction
from functools import lru_cache

from sympy import factorint, integer_nthroot
from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement, field
from sympy.polys.orderings import grlex

from src.errors import DivisionByZero, FieldMismatch

# grlex over (lambda, mu) fixes the canonical sign of denominators
_RATFUNC_FIELD, _LAM, _MU = field("lam,mu", QQ, grlex)
_RATFUNC_NAMES = ("lambda", "mu")


class FieldKind(StrEnum):
    """Kind of coefficient field."""

    RATIONAL = auto()
    QUADRATIC = auto()
    RATFUNC = auto()


@dataclass(frozen=True)
class FieldContext:
    """Identifies the field a Scalar lives in."""

    kind: FieldKind
    d: int | None = None

    def __str__(self) -> str:
        if self.kind is FieldKind.RATIONAL:
            return "QQ"
        if self.kind is FieldKind.QUADRATIC:
            return f"QQ(sqrt({self.d}))"
        return "QQ(lambda,mu)"

    def coerce(self, value: "int | Fraction | Scalar") -> "Scalar":
        """Bring an integer, fraction or compatible Scalar into this field."""
        if isinstance(value, Scalar):
            if value.context == self:
                return value
            if isinstance(value, Rational):
                return self.coerce(value.value)
            raise FieldMismatch(f"cannot move {value.context} element into {self}")
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise TypeError(f"cannot coerce {type(value).__name__} into {self}")
        if self.kind is FieldKind.RATIONAL:
            return Rational(value)
        if self.kind is FieldKind.QUADRATIC:
            return QuadExt(value, 0, self.d)
        return RatFunc(value)

    def zero(self) -> "Scalar":
        return self.coerce(0)

    def one(self) -> "Scalar":
        return self.coerce(1)


RATIONAL_FIELD = FieldContext(FieldKind.RATIONAL)
RATFUNC_FIELD = FieldContext(FieldKind.RATFUNC)


def squarefree_decomposition(n: int) -> tuple[int, int]:
    """Split a nonzero integer as n = k**2 * d with d squarefree and k > 0."""
    if n == 0:
        raise ValueError("0 has no squarefree decomposition")
    k, d = 1, -1 if n < 0 else 1
    for prime, exponent in factorint(abs(n)).items():
        k *= prime ** (exponent // 2)
        if exponent % 2:
            d *= prime
    return k, d


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a non-negative rational, or None."""
    if q < 0:
        return None
    num, num_exact = integer_nthroot(q.numerator, 2)
    den, den_exact = integer_nthroot(q.denominator, 2)
    if num_exact and den_exact:
        return Fraction(int(num), int(den))
    return None


@lru_cache(maxsize=None)
def quadratic_field(d: int) -> FieldContext:
    """Context of QQ(sqrt(d)); d must be squarefree and not 0 or 1."""
    if d in (0, 1) or squarefree_decomposition(d) != (1, d):
        raise ValueError(f"sqrt({d}) does not generate a quadratic field")
    return FieldContext(FieldKind.QUADRATIC, d)


class Scalar(ABC):
    """Element of one of the exact coefficient fields."""

    __slots__ = ()

    @property
    @abstractmethod
    def context(self) -> FieldContext: ...

    @abstractmethod
    def _add(self, other: "Scalar") -> "Scalar": ...

    @abstractmethod
    def _mul(self, other: "Scalar") -> "Scalar": ...

    @abstractmethod
    def __neg__(self) -> "Scalar": ...

    @abstractmethod
    def is_zero(self) -> bool: ...

    @abstractmethod
    def inv(self) -> "Scalar": ...

    @abstractmethod
    def _key(self) -> tuple: ...

    @abstractmethod
    def to_text(self) -> str:
        """Canonical string accepted by the expression grammar."""

    @abstractmethod
    def is_compound(self) -> bool:
        """True when the text has a top-level sum and needs parentheses in a product."""

    def as_fraction(self) -> Fraction | None:
        """The value as a Fraction when it is rational, else None."""
        return None

    def _coerce(self, other: object) -> "Scalar":
        if isinstance(other, Scalar):
            if other.context != self.context:
                raise FieldMismatch(f"{self.context} vs {other.context}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.context.coerce(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._add(other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._add(-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other._add(-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._mul(other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._mul(other.inv())

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other._mul(self.inv())

    def __pow__(self, exponent: int) -> "Scalar":
        if exponent < 0:
            return self.inv() ** (-exponent)
        result, base = self.context.one(), self
        while exponent:
            if exponent & 1:
                result = result._mul(base)
            base = base._mul(base)
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Scalar) and other.context != self.context:
            return False
        try:
            other = self._coerce(other)
        except TypeError:
            return False
        if other is NotImplemented:
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_one(self) -> bool:
        return self == 1

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_text()})"


class Rational(Scalar):
    """Element of QQ."""

    __slots__ = ("value",)

    def __init__(self, value: int | Fraction | str) -> None:
        self.value = Fraction(value)

    @property
    def context(self) -> FieldContext:
        return RATIONAL_FIELD

    def _add(self, other: "Rational") -> "Rational":
        return Rational(self.value + other.value)

    def _mul(self, other: "Rational") -> "Rational":
        return Rational(self.value * other.value)

    def __neg__(self) -> "Rational":
        return Rational(-self.value)

    def is_zero(self) -> bool:
        return self.value == 0

    def inv(self) -> "Rational":
        if self.value == 0:
            raise DivisionByZero("cannot invert 0")
        return Rational(1 / self.value)

    def _key(self) -> tuple:
        return (self.value,)

    def as_fraction(self) -> Fraction:
        return self.value

    def to_text(self) -> str:
        return str(self.value)

    def is_compound(self) -> bool:
        return False


class QuadExt(Scalar):
    """Element a + b*sqrt(d) of QQ(sqrt(d))."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a: int | Fraction, b: int | Fraction, d: int) -> None:
        quadratic_field(d)
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = d

    @classmethod
    def sqrt_of(cls, n: int, d: int) -> "QuadExt":
        """sqrt(n) inside QQ(sqrt(d)); the squarefree part of n must be 1 or d."""
        if n == 0:
            return cls(0, 0, d)
        k, part = squarefree_decomposition(n)
        if part == 1:
            return cls(k, 0, d)
        if part != d:
            raise FieldMismatch(f"sqrt({n}) is not in QQ(sqrt({d}))")
        return cls(0, k, d)

    @property
    def context(self) -> FieldContext:
        return quadratic_field(self.d)

    def _add(self, other: "QuadExt") -> "QuadExt":
        return QuadExt(self.a + other.a, self.b + other.b, self.d)

    def _mul(self, other: "QuadExt") -> "QuadExt":
        return QuadExt(
            self.a * other.a + self.d * self.b * other.b,
            self.a * other.b + self.b * other.a,
            self.d,
        )

    def __neg__(self) -> "QuadExt":
        return QuadExt(-self.a, -self.b, self.d)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def inv(self) -> "QuadExt":
        n = self.norm()
        if n == 0:
            raise DivisionByZero("cannot invert 0")
        return QuadExt(self.a / n, -self.b / n, self.d)

    def sqrt(self) -> "QuadExt | None":
        """A square root inside the same field, or None if there is none."""
        if self.b == 0:
            root = rational_sqrt(self.a)
            if root is not None:
                return QuadExt(root, 0, self.d)
            root = rational_sqrt(self.a / self.d)
            if root is not None:
                return QuadExt(0, root, self.d)
            return None
        # (p + q*sqrt(d))^2 = a + b*sqrt(d) forces p^2 = (a +- sqrt(N(x))) / 2
        root_norm = rational_sqrt(self.norm())
        if root_norm is None:
            return None
        for p_squared in ((self.a + root_norm) / 2, (self.a - root_norm) / 2):
            p = rational_sqrt(p_squared)
            if p:
                candidate = QuadExt(p, self.b / (2 * p), self.d)
                if candidate * candidate == self:
                    return candidate
        return None

    def _key(self) -> tuple:
        return (self.a, self.b, self.d)

    def as_fraction(self) -> Fraction | None:
        return self.a if self.b == 0 else None

    def to_text(self) -> str:
        radical = f"sqrt({self.d})"
        if self.b == 0:
            return str(self.a)
        if self.b == 1:
            irrational = radical
        elif self.b == -1:
            irrational = f"-{radical}"
        else:
            irrational = f"{self.b}*{radical}"
        if self.a == 0:
            return irrational
        if irrational.startswith("-"):
            return f"{self.a} - {irrational[1:]}"
        return f"{self.a} + {irrational}"

    def is_compound(self) -> bool:
        return self.a != 0 and self.b != 0


def _poly_text(poly) -> str:
    """Render a sympy PolyElement over QQ in (lambda, mu) with the grammar's syntax."""
    pieces: list[str] = []
    for monom, coeff in poly.terms():
        c = Fraction(int(coeff.numerator), int(coeff.denominator))
        factors = [
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(_RATFUNC_NAMES, monom)
            if e
        ]
        if not factors:
            body = str(abs(c))
        elif abs(c) == 1:
            body = "*".join(factors)
        else:
            body = f"{abs(c)}*" + "*".join(factors)
        if not pieces:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(pieces) if pieces else "0"


class RatFunc(Scalar):
    """Element of QQ(lambda, mu), backed by a sympy FracElement."""

    __slots__ = ("value",)

    def __init__(self, value: int | Fraction | FracElement) -> None:
        if isinstance(value, Fraction):
            value = _RATFUNC_FIELD(QQ(value.numerator, value.denominator))
        elif not isinstance(value, FracElement):
            value = _RATFUNC_FIELD(value)
        self.value = value

    @classmethod
    def lam(cls) -> "RatFunc":
        return cls(_LAM)

    @classmethod
    def mu(cls) -> "RatFunc":
        return cls(_MU)

    @property
    def context(self) -> FieldContext:
        return RATFUNC_FIELD

    def _add(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.value + other.value)

    def _mul(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.value * other.value)

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.value)

    def is_zero(self) -> bool:
        return not self.value

    def inv(self) -> "RatFunc":
        if not self.value:
            raise DivisionByZero("cannot invert 0")
        return RatFunc(1 / self.value)

    def __pow__(self, exponent: int) -> "RatFunc":
        if exponent < 0 and not self.value:
            raise DivisionByZero("cannot invert 0")
        return RatFunc(self.value**exponent)

    def _key(self) -> tuple:
        return (self.value.numer, self.value.denom)

    def __hash__(self) -> int:
        return hash(self.value)

    def as_fraction(self) -> Fraction | None:
        numer, denom = self.value.numer, self.value.denom
        if not (numer.is_ground and denom.is_ground):
            return None
        n = numer.get(numer.ring.zero_monom, 0)
        m = denom.get(denom.ring.zero_monom)
        return Fraction(int(n.numerator), int(n.denominator)) / Fraction(
            int(m.numerator), int(m.denominator)
        )

    def to_text(self) -> str:
        numer, denom = self.value.numer, self.value.denom
        if denom.is_ground:
            c = denom.get(denom.ring.zero_monom)
            return _poly_text(numer.quo_ground(c))
        numer_text = _poly_text(numer)
        if len(numer) > 1:
            numer_text = f"({numer_text})"
        denom_text = _poly_text(denom)
        (monom, coeff), *rest = denom.terms()
        if rest or coeff != 1 or sum(1 for e in monom if e) > 1:
            denom_text = f"({denom_text})"
        return f"{numer_text}/{denom_text}"

    def is_compound(self) -> bool:
        return self.value.denom.is_ground and len(self.value.numer) > 1


def lift(x: Scalar | int | Fraction, context: FieldContext) -> Scalar:
    """Move x into context (rationals embed everywhere)."""
    return context.coerce(x)


def common_context(*values: Scalar | int | Fraction) -> FieldContext:
    """The field all Scalars live in after embedding rationals.

    Raises:
        FieldMismatch: if two non-rational contexts differ.
    """
    context = RATIONAL_FIELD
    for value in values:
        if not isinstance(value, Scalar) or value.context == RATIONAL_FIELD:
            continue
        if context == RATIONAL_FIELD:
            context = value.context
        elif context != value.context:
            raise FieldMismatch(f"{context} vs {value.context}")
    return context


def arith(op: str, x: Scalar, y: Scalar | None = None) -> Scalar | bool:
    """Apply a named field operation; the operator methods do the real work."""
    if y is not None and isinstance(y, Scalar) and x.context != y.context:
        raise FieldMismatch(f"{x.context} vs {y.context}")
    match op:
        case "add":
            return x + y
        case "sub":
            return x - y
        case "mul":
            return x * y
        case "div":
            return x / y
        case "inv":
            return x.inv()
        case "neg":
            return -x
        case "eq":
            return x == y
    raise ValueError(f"unknown operation {op!r}")
