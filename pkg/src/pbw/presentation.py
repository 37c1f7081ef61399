"""PBW presentations: ordered generators with commutation rewrite rules.

A rule for generators x_j > x_i reads x_j*x_i -> c*x_i*x_j + tail, where c is
a nonzero scalar and tail is a combination of normal words of total degree at
most 2, each deglex-smaller than x_i*x_j. Generator pairs without a rule
commute. Products of normal words are computed by a memoized recursion over
(word, generator) steps; every step asserts that its result is led by the
expected word, so rewriting cannot loop.
"""

import itertools
import re
import threading
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType

from loguru import logger

from src.errors import InconsistentPresentation, PresentationMismatch
from src.pbw.ncpoly import Monomial, NcPoly, accumulate, deglex_key
from src.scalars.fields import RATFUNC_FIELD, FieldContext, RatFunc, Scalar

Word = tuple[str, ...]
RuleSpec = tuple[Scalar | int | Fraction, Mapping[Word, Scalar | int | Fraction]]

_SYMBOL = re.compile(r"^[a-z][a-z0-9_]*$")
_RESERVED = frozenset({"lambda", "mu", "sqrt"})


@dataclass(frozen=True)
class Rule:
    """x_high * x_low -> coeff * x_low * x_high + tail."""

    high: int
    low: int
    coeff: Scalar
    tail: tuple[tuple[Monomial, Scalar], ...] = ()


@dataclass(frozen=True)
class DownUpParameters:
    """Parameters of a down-up style presentation over QQ(lambda, mu)."""

    lam: Scalar
    mu: Scalar
    gamma: int


@dataclass(eq=False)
class Presentation:
    """An ordered generator set with its commutation rules.

    Instances are compared by identity; polynomials from two presentations
    never mix even when the rule sets coincide.
    """

    name: str
    symbols: tuple[str, ...]
    context: FieldContext
    rule_specs: Mapping[tuple[str, str], RuleSpec]
    parameters: DownUpParameters | None = None
    rules: Mapping[tuple[int, int], Rule] = field(init=False)
    _word_gen: dict[tuple[Monomial, int], dict[Monomial, Scalar]] = field(
        init=False, default_factory=dict, repr=False
    )
    _word_word: dict[tuple[Monomial, Monomial], dict[Monomial, Scalar]] = field(
        init=False, default_factory=dict, repr=False
    )
    _cache_lock: threading.Lock = field(init=False, default_factory=threading.Lock, repr=False)

    def __post_init__(self) -> None:
        if len(set(self.symbols)) != len(self.symbols) or not self.symbols:
            raise InconsistentPresentation(f"{self.name}: generators must be distinct")
        for symbol in self.symbols:
            if not _SYMBOL.match(symbol) or symbol in _RESERVED:
                raise InconsistentPresentation(f"{self.name}: bad generator name {symbol!r}")
        rules: dict[tuple[int, int], Rule] = {}
        for (high_symbol, low_symbol), spec in self.rule_specs.items():
            rule = self._compile_rule(high_symbol, low_symbol, spec)
            rules[(rule.high, rule.low)] = rule
        self.rules = MappingProxyType(rules)
        self.check_overlaps()
        logger.debug(f"presentation {self.name} ready with {len(rules)} rules")

    @property
    def ngens(self) -> int:
        return len(self.symbols)

    def index(self, symbol: str) -> int:
        try:
            return self.symbols.index(symbol)
        except ValueError:
            raise PresentationMismatch(
                f"{symbol!r} is not a generator of {self.name}"
            ) from None

    def word_monomial(self, word: Sequence[str]) -> Monomial:
        """Exponent vector of a normal word given as a symbol sequence."""
        exponents = [0] * self.ngens
        last = -1
        for symbol in word:
            position = self.index(symbol)
            if position < last:
                raise InconsistentPresentation(
                    f"{self.name}: {'*'.join(word)} is not a normal word"
                )
            exponents[position] += 1
            last = position
        return tuple(exponents)

    def _compile_rule(self, high_symbol: str, low_symbol: str, spec: RuleSpec) -> Rule:
        high, low = self.index(high_symbol), self.index(low_symbol)
        if high <= low:
            raise InconsistentPresentation(
                f"{self.name}: rule {high_symbol}*{low_symbol} must rewrite a descending pair"
            )
        coeff, tail_spec = spec
        coeff = self.context.coerce(coeff)
        if coeff.is_zero():
            raise InconsistentPresentation(
                f"{self.name}: rule {high_symbol}*{low_symbol} has zero constant"
            )
        pair = [0] * self.ngens
        pair[high] += 1
        pair[low] += 1
        pair_key = deglex_key(tuple(pair))
        tail: dict[Monomial, Scalar] = {}
        for word, value in tail_spec.items():
            monomial = self.word_monomial(word)
            if sum(monomial) > 2 or deglex_key(monomial) >= pair_key:
                raise InconsistentPresentation(
                    f"{self.name}: tail word {'*'.join(word) or '1'} of rule "
                    f"{high_symbol}*{low_symbol} is not below {low_symbol}*{high_symbol}"
                )
            accumulate(tail, monomial, self.context.coerce(value))
        return Rule(high, low, coeff, tuple(sorted(tail.items())))

    def rule_for(self, high: int, low: int) -> Rule:
        rule = self.rules.get((high, low))
        if rule is None:
            return Rule(high, low, self.context.one())
        return rule

    def _mul_word_gen(self, monomial: Monomial, gen: int) -> dict[Monomial, Scalar]:
        key = (monomial, gen)
        cached = self._word_gen.get(key)
        if cached is not None:
            return cached
        expected = _bump(monomial, gen, 1)
        top = max((j for j in range(gen + 1, self.ngens) if monomial[j]), default=None)
        if top is None:
            result = {expected: self.context.one()}
        else:
            # m = rest * x_top, so m * x_gen = c * (rest * x_gen) * x_top + rest * tail
            rest = _bump(monomial, top, -1)
            rule = self.rule_for(top, gen)
            result: dict[Monomial, Scalar] = {}
            for word, c in self._mul_word_gen(rest, gen).items():
                for word2, c2 in self._mul_word_gen(word, top).items():
                    accumulate(result, word2, rule.coeff * c * c2)
            for tail_word, tail_coeff in rule.tail:
                for word, c in self.multiply_words(rest, tail_word).items():
                    accumulate(result, word, tail_coeff * c)
            self._check_step(monomial, gen, expected, result)
        with self._cache_lock:
            return self._word_gen.setdefault(key, result)

    def _check_step(
        self,
        monomial: Monomial,
        gen: int,
        expected: Monomial,
        result: Mapping[Monomial, Scalar],
    ) -> None:
        expected_key = deglex_key(expected)
        if expected not in result or any(
            deglex_key(word) > expected_key for word in result
        ):
            raise InconsistentPresentation(
                f"{self.name}: {self.word_text(monomial)}*{self.symbols[gen]} "
                "is not led by its sorted word"
            )

    def multiply_words(self, left: Monomial, right: Monomial) -> dict[Monomial, Scalar]:
        """Normal form of the product of two normal words (cached, shared)."""
        key = (left, right)
        cached = self._word_word.get(key)
        if cached is not None:
            return cached
        result: dict[Monomial, Scalar] = {left: self.context.one()}
        for gen, exponent in enumerate(right):
            for _ in range(exponent):
                step: dict[Monomial, Scalar] = {}
                for word, c in result.items():
                    for word2, c2 in self._mul_word_gen(word, gen).items():
                        accumulate(step, word2, c * c2)
                result = step
        with self._cache_lock:
            result = self._word_word.setdefault(key, result)
            size = len(self._word_word)
        if size % 5000 == 0:
            logger.debug(f"{self.name}: {size} cached word products")
        return result

    def check_overlaps(self) -> None:
        """Resolve every overlap x_k*x_j*x_i (k > j > i) both ways.

        Raises:
            InconsistentPresentation: if the two reductions differ.
        """
        for low, mid, high in itertools.combinations(range(self.ngens), 3):
            x_low, x_mid, x_high = (self.generator(low), self.generator(mid), self.generator(high))
            left = (x_high * x_mid) * x_low
            right = x_high * (x_mid * x_low)
            if left != right:
                raise InconsistentPresentation(
                    f"{self.name}: overlap {self.symbols[high]}*{self.symbols[mid]}*"
                    f"{self.symbols[low]} resolves to {left} and to {right}"
                )

    def generator(self, which: int | str) -> NcPoly:
        position = which if isinstance(which, int) else self.index(which)
        return NcPoly(self, {_unit(self.ngens, position): self.context.one()})

    def gens(self) -> dict[str, NcPoly]:
        return {symbol: self.generator(symbol) for symbol in self.symbols}

    def scalar(self, value: Scalar | int | Fraction) -> NcPoly:
        return NcPoly(self, {(0,) * self.ngens: self.context.coerce(value)})

    def one(self) -> NcPoly:
        return self.scalar(1)

    def zero(self) -> NcPoly:
        return NcPoly(self)

    def monomial(self, exponents: Monomial, coeff: Scalar | int | Fraction = 1) -> NcPoly:
        if len(exponents) != self.ngens or any(e < 0 for e in exponents):
            raise ValueError(f"bad exponent vector {exponents} for {self.name}")
        return NcPoly(self, {tuple(exponents): self.context.coerce(coeff)})

    def word(self, *symbols: str) -> NcPoly:
        """Product of generators in the given (not necessarily normal) order."""
        result = self.one()
        for symbol in symbols:
            result = result * self.generator(symbol)
        return result

    def words(self, max_degree: int) -> list[Monomial]:
        """All normal words of total degree at most max_degree, deglex ascending."""
        found = []
        for degree in range(max_degree + 1):
            for combo in itertools.combinations_with_replacement(range(self.ngens), degree):
                exponents = [0] * self.ngens
                for gen in combo:
                    exponents[gen] += 1
                found.append(tuple(exponents))
        return sorted(found, key=deglex_key)

    def word_text(self, monomial: Monomial) -> str:
        factors = [
            symbol if e == 1 else f"{symbol}^{e}"
            for symbol, e in zip(self.symbols, monomial)
            if e
        ]
        return "*".join(factors) if factors else "1"

    def __str__(self) -> str:
        return self.name


def _unit(n: int, position: int) -> Monomial:
    exponents = [0] * n
    exponents[position] = 1
    return tuple(exponents)


def _bump(monomial: Monomial, position: int, by: int) -> Monomial:
    exponents = list(monomial)
    exponents[position] += by
    return tuple(exponents)


_REGISTRY: dict[tuple, Presentation] = {}


def _registered(key: tuple, build) -> Presentation:
    presentation = _REGISTRY.get(key)
    if presentation is None:
        # setdefault keeps one instance when threads race on the first build
        presentation = _REGISTRY.setdefault(key, build())
    return presentation


def _check_gamma(gamma: int) -> int:
    if gamma not in (0, 1):
        raise ValueError(f"gamma must be 0 or 1 after normalization, got {gamma}")
    return int(gamma)


def make_downup(
    gamma: int = 1,
    lam: Scalar | int | Fraction | None = None,
    mu: Scalar | int | Fraction | None = None,
) -> Presentation:
    """A(gamma) on u < w < d over QQ(lambda, mu), with w = d*u - lambda*u*d.

    Rules: d*u -> lambda*u*d + w, w*u -> mu*u*w + gamma*u, d*w -> mu*w*d + gamma*d.
    lam and mu may be specialized to constants; repeated calls with equal
    arguments return the same Presentation.
    """
    gamma = _check_gamma(gamma)
    lam_value = RatFunc.lam() if lam is None else RATFUNC_FIELD.coerce(lam)
    mu_value = RatFunc.mu() if mu is None else RATFUNC_FIELD.coerce(mu)

    def build() -> Presentation:
        specialized = []
        if lam is not None:
            specialized.append(f"lambda={lam_value}")
        if mu is not None:
            specialized.append(f"mu={mu_value}")
        name = f"A{gamma}" + (f"[{','.join(specialized)}]" if specialized else "")
        rules: dict[tuple[str, str], RuleSpec] = {
            ("d", "u"): (lam_value, {("w",): 1}),
            ("w", "u"): (mu_value, {("u",): gamma} if gamma else {}),
            ("d", "w"): (mu_value, {("d",): gamma} if gamma else {}),
        }
        return Presentation(
            name,
            ("u", "w", "d"),
            RATFUNC_FIELD,
            rules,
            DownUpParameters(lam_value, mu_value, gamma),
        )

    return _registered(("downup", gamma, lam_value, mu_value), build)


def make_tilde(gamma: int = 1) -> Presentation:
    """The subalgebra on u < w with w*u -> mu*u*w + gamma*u."""
    gamma = _check_gamma(gamma)

    def build() -> Presentation:
        mu = RatFunc.mu()
        rules: dict[tuple[str, str], RuleSpec] = {
            ("w", "u"): (mu, {("u",): gamma} if gamma else {}),
        }
        return Presentation(
            f"tilde{gamma}",
            ("u", "w"),
            RATFUNC_FIELD,
            rules,
            DownUpParameters(RatFunc.lam(), mu, gamma),
        )

    return _registered(("tilde", gamma), build)


def get_presentation(name: str) -> Presentation:
    """Look up a standard presentation by name: A0, A1, tilde0, tilde1."""
    match name:
        case "A0" | "A1":
            return make_downup(int(name[1]))
        case "tilde0" | "tilde1":
            return make_tilde(int(name[-1]))
    raise PresentationMismatch(f"unknown presentation {name!r}")
