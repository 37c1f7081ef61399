"""Homomorphism checks: relations in free symbols evaluated through images."""

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction

from loguru import logger

from src.errors import PresentationMismatch
from src.pbw.ncpoly import NcPoly
from src.pbw.presentation import Presentation
from src.scalars.fields import Scalar

Coefficient = Scalar | int | Fraction


@dataclass(frozen=True)
class Relation:
    """sum of coeff * word = 0, words being sequences of free symbols."""

    name: str
    terms: tuple[tuple[Coefficient, tuple[str, ...]], ...]

    def symbols(self) -> set[str]:
        return {symbol for _, word in self.terms for symbol in word}


@dataclass(frozen=True)
class MorphismResult:
    """Outcome of a homomorphism check; failure names the first broken relation."""

    ok: bool
    checked: int
    failure: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def evaluate(relation: Relation, images: Mapping[str, NcPoly], dst: Presentation) -> NcPoly:
    """The left-hand side of relation with every symbol replaced by its image."""
    total = dst.zero()
    for coeff, word in relation.terms:
        product = dst.scalar(coeff)
        for symbol in word:
            product = product * images[symbol]
        total = total + product
    return total


def verify_relations(
    relations: Sequence[Relation],
    images: Mapping[str, NcPoly],
    dst: Presentation,
) -> MorphismResult:
    """Check every relation vanishes on the images inside dst.

    Raises:
        ValueError: if a relation uses a symbol without an image.
        PresentationMismatch: if an image lives outside dst.
    """
    for image in images.values():
        if image.presentation is not dst:
            raise PresentationMismatch(f"image {image} is not in {dst.name}")
    for checked, relation in enumerate(relations):
        missing = relation.symbols() - images.keys()
        if missing:
            raise ValueError(f"no image for {', '.join(sorted(missing))}")
        residue = evaluate(relation, images, dst)
        if not residue.is_zero():
            logger.warning(f"relation {relation.name} fails in {dst.name}: residue {residue}")
            return MorphismResult(False, checked, f"{relation.name}: residue {residue}")
    return MorphismResult(True, len(relations))


def rule_relations(src: Presentation) -> list[Relation]:
    """x_j*x_i - c*x_i*x_j - tail = 0 for every descending generator pair of src."""
    relations = []
    symbols = src.symbols
    for high in range(src.ngens):
        for low in range(high):
            rule = src.rule_for(high, low)
            terms: list[tuple[Coefficient, tuple[str, ...]]] = [
                (1, (symbols[high], symbols[low])),
                (-rule.coeff, (symbols[low], symbols[high])),
            ]
            for monomial, coeff in rule.tail:
                word = tuple(s for s, e in zip(symbols, monomial) for _ in range(e))
                terms.append((-coeff, word))
            relations.append(Relation(f"{symbols[high]}*{symbols[low]}", tuple(terms)))
    return relations


def verify_morphism(src: Presentation, images: Mapping[str, NcPoly]) -> MorphismResult:
    """Check that images of src generators satisfy every rule of src.

    Raises:
        ValueError: if a generator has no image or images is empty.
    """
    if not images:
        raise ValueError("no images given")
    missing = set(src.symbols) - images.keys()
    if missing:
        raise ValueError(f"no image for {', '.join(sorted(missing))}")
    dst = next(iter(images.values())).presentation
    result = verify_relations(rule_relations(src), images, dst)
    logger.info(f"morphism {src.name} -> {dst.name}: {'ok' if result else result.failure}")
    return result


def downup_relations(alpha: Coefficient, beta: Coefficient, gamma: Coefficient) -> list[Relation]:
    """The two cubic relations of A(alpha, beta, gamma) in the symbols U, D."""
    return [
        Relation(
            "D*U^2",
            (
                (1, ("D", "U", "U")),
                (-alpha, ("U", "D", "U")),
                (-beta, ("U", "U", "D")),
                (-gamma, ("U",)),
            ),
        ),
        Relation(
            "D^2*U",
            (
                (1, ("D", "D", "U")),
                (-alpha, ("D", "U", "D")),
                (-beta, ("U", "D", "D")),
                (-gamma, ("D",)),
            ),
        ),
    ]


def gwa_relations(alpha: Coefficient, beta: Coefficient, gamma: Coefficient) -> list[Relation]:
    """Generalized Weyl algebra relations over K[x, y] with
    phi(x) = y, phi(y) = alpha*y + beta*x + gamma, in symbols Xp, Xm, x, y.
    """
    return [
        Relation("Xm*Xp = x", ((1, ("Xm", "Xp")), (-1, ("x",)))),
        Relation("Xp*Xm = y", ((1, ("Xp", "Xm")), (-1, ("y",)))),
        Relation("Xp*x = y*Xp", ((1, ("Xp", "x")), (-1, ("y", "Xp")))),
        Relation(
            "Xp*y = phi(y)*Xp",
            (
                (1, ("Xp", "y")),
                (-alpha, ("y", "Xp")),
                (-beta, ("x", "Xp")),
                (-gamma, ("Xp",)),
            ),
        ),
        Relation("Xm*y = x*Xm", ((1, ("Xm", "y")), (-1, ("x", "Xm")))),
        Relation(
            "Xm*phi(y) = y*Xm",
            (
                (alpha, ("Xm", "y")),
                (beta, ("Xm", "x")),
                (gamma, ("Xm",)),
                (-1, ("y", "Xm")),
            ),
        ),
        Relation("x*y = y*x", ((1, ("x", "y")), (-1, ("y", "x")))),
    ]


def downup_images(presentation: Presentation) -> dict[str, NcPoly]:
    """U -> u, D -> d."""
    return {"U": presentation.generator("u"), "D": presentation.generator("d")}


def gwa_images(presentation: Presentation) -> dict[str, NcPoly]:
    """Xp -> d, Xm -> u, x -> u*d, y -> d*u."""
    u, d = presentation.generator("u"), presentation.generator("d")
    return {"Xp": d, "Xm": u, "x": u * d, "y": d * u}


def bracket_images(dst: Presentation) -> dict[str, NcPoly]:
    """u -> u, w -> d*u - lambda*u*d, d -> d.

    Raises:
        PresentationMismatch: if dst carries no down-up parameters.
    """
    if dst.parameters is None:
        raise PresentationMismatch(f"{dst.name} is not a down-up presentation")
    u, d = dst.generator("u"), dst.generator("d")
    return {"u": u, "w": d * u - (u * d).scale(dst.parameters.lam), "d": d}


def apply_images(f: NcPoly, images: Mapping[str, NcPoly]) -> NcPoly:
    """Image of f under the homomorphism determined by generator images."""
    dst = next(iter(images.values())).presentation
    total = dst.zero()
    for monomial, coeff in f.terms.items():
        product = dst.scalar(coeff)
        for symbol, exponent in zip(f.presentation.symbols, monomial):
            for _ in range(exponent):
                product = product * images[symbol]
        total = total + product
    return total
