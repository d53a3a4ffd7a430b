"""
JacobianContext: the genus (and optional gonality) every element lives in,
together with the forced vanishing rules on bidegrees.

Bidegree (p, s): p is the codimension, s the level.
The rules are applied identically on the intersection side (Newton
monomials) and the convolution side (Pontryagin monomials), so the
Fourier maps between the two sides send surviving monomials to surviving
monomials.
"""
from enum import Enum
from typing import Optional, Sequence, Tuple

from pydantic import BaseModel, Field, ValidationError, model_validator

from src.utils.exceptions import DomainError


class Direction(str, Enum):
    PULLBACK = "pullback"
    PUSHFORWARD = "pushforward"


class JacobianContext(BaseModel):
    genus: int = Field(..., ge=2, description="Genus g of the curve")
    gonality: Optional[int] = Field(
        default=None, description="Degree d of a map to P^1; None means no assumption"
    )

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def validate_gonality(self):
        if self.gonality is not None and not 2 <= self.gonality <= self.genus + 1:
            raise ValueError(
                f"Gonality must satisfy 2 <= d <= g+1 (g={self.genus}, d={self.gonality})"
            )
        return self

    @property
    def max_part(self) -> int:
        """Largest level s with C_(s) not forced to vanish."""
        top = self.genus - 2
        if self.gonality is not None:
            top = min(top, self.gonality - 2)
        return top

    @property
    def max_generator(self) -> int:
        """Largest k with N^k not forced to vanish."""
        top = self.genus - 1
        if self.gonality is not None:
            top = min(top, self.gonality - 1)
        return top

    @property
    def component_count(self) -> int:
        """Number of level components C_(0), ..., C_(max_part) of the curve class."""
        return self.max_part + 1

    def describe(self) -> str:
        if self.gonality is None:
            return f"g={self.genus}"
        return f"g={self.genus}, d={self.gonality}"

    # --- kill rules -------------------------------------------------------

    def kills_bidegree(self, p: int, s: int) -> bool:
        g = self.genus
        if p < 0 or p > g or s < 0 or s >= g:
            return True
        if s > 0 and s >= p:
            # covers p <= 1 with s > 0
            return True
        if p == g and s > 0:
            return True
        return False

    def kills_newton(self, monomial: Sequence[int]) -> bool:
        """monomial lists generator indices with repetition, e.g. (1, 1, 2)."""
        if any(i < 1 or i > self.max_generator for i in monomial):
            return True
        p = sum(monomial)
        return self.kills_bidegree(p, p - len(monomial))

    def kills_pontryagin(self, parts: Sequence[int]) -> bool:
        """parts lists levels s_i of the factors C_(s_i)."""
        r = len(parts)
        if r > self.genus:
            return True
        if any(s < 0 or s > self.max_part for s in parts):
            return True
        return self.kills_bidegree(self.genus - r, sum(parts))


def build_context(genus: int, gonality: Optional[int] = None) -> JacobianContext:
    """Construct a context, reporting bad genus/gonality as DomainError."""
    try:
        return JacobianContext(genus=genus, gonality=gonality)
    except ValidationError as e:
        messages = "; ".join(err["msg"] for err in e.errors())
        raise DomainError(f"Invalid context (genus={genus}, gonality={gonality}): {messages}") from e


def newton_bidegree(monomial: Sequence[int]) -> Tuple[int, int]:
    p = sum(monomial)
    return p, p - len(monomial)


def pontryagin_bidegree(genus: int, parts: Sequence[int]) -> Tuple[int, int]:
    return genus - len(parts), sum(parts)


def scaling_exponent(genus: int, p: int, s: int, direction: Direction) -> int:
    """k^* acts by k^(2p-s), k_* by k^(2g-2p+s) on bidegree (p, s)."""
    if direction == Direction.PULLBACK:
        return 2 * p - s
    return 2 * genus - 2 * p + s
