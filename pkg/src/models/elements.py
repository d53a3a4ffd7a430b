"""
Element types of the tautological ring model.

NElement lives on the intersection side: a rational combination of
monomials in the Newton classes N^1, ..., N^{g-1}. A monomial is the
sorted tuple of generator indices with repetition, so (1, 1, 2) is
(N^1)^2 N^2 and () is the fundamental class [J].

PElement lives on the convolution side: a rational combination of
Pontryagin monomials <s1, ..., sr> = C_(s1) * ... * C_(sr), stored as the
sorted tuple of parts. () is the point class [pt].

Both are canonical on construction: zero coefficients and monomials
killed by the context's rules are dropped. Treat instances as immutable.
"""
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Set, Tuple

from src.models.context import (
    JacobianContext,
    newton_bidegree,
    pontryagin_bidegree,
)
from src.utils.exceptions import DomainError
from src.utils.exact_kernel import RationalLike

Monomial = Tuple[int, ...]
Bidegree = Tuple[int, int]


class KTuple(tuple):
    """(k1, ..., kr) standing for (k1_* C) * ... * (kr_* C); stored sorted."""

    def __new__(cls, entries: Iterable[int] = ()):
        return super().__new__(cls, sorted(int(k) for k in entries))

    @property
    def is_zero(self) -> bool:
        # pushforward of the curve under the zero map collapses it
        return any(k == 0 for k in self)

    def __repr__(self) -> str:
        return f"KTuple({list(self)})"


class _Element:
    __slots__ = ("context", "_terms")

    def __init__(self, context: JacobianContext, terms: Optional[Mapping[Monomial, RationalLike]] = None):
        self.context = context
        clean: Dict[Monomial, Fraction] = {}
        for monomial, coeff in (terms or {}).items():
            key = tuple(sorted(monomial))
            if self._kills(key):
                continue
            value = clean.get(key, Fraction(0)) + Fraction(coeff)
            if value:
                clean[key] = value
            else:
                clean.pop(key, None)
        self._terms = clean

    # subclasses supply the kill rule and the bidegree of a monomial
    def _kills(self, monomial: Monomial) -> bool:
        raise NotImplementedError

    def bidegree_of(self, monomial: Monomial) -> Bidegree:
        raise NotImplementedError

    def _sort_key(self, monomial: Monomial):
        return monomial

    # --- construction helpers ---------------------------------------------

    @classmethod
    def zero(cls, context: JacobianContext):
        return cls(context)

    @classmethod
    def monomial(cls, context: JacobianContext, monomial: Iterable[int], coeff: RationalLike = 1):
        return cls(context, {tuple(monomial): coeff})

    def _new(self, terms: Mapping[Monomial, RationalLike]):
        return type(self)(self.context, terms)

    # --- inspection -------------------------------------------------------

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> List[Tuple[Monomial, Fraction]]:
        """Terms in canonical order."""
        return [(m, self._terms[m]) for m in sorted(self._terms, key=self._sort_key)]

    def coefficient(self, monomial: Iterable[int]) -> Fraction:
        return self._terms.get(tuple(sorted(monomial)), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def bidegrees(self) -> Set[Bidegree]:
        return {self.bidegree_of(m) for m in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.bidegrees()) <= 1

    def project(self, p: int, s: int):
        return self._new({m: c for m, c in self._terms.items() if self.bidegree_of(m) == (p, s)})

    # --- linear structure -------------------------------------------------

    def _check_same_context(self, other: "_Element") -> None:
        if type(other) is not type(self):
            raise DomainError(f"Cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.context != self.context:
            raise DomainError(
                f"Mismatched contexts: {self.context.describe()} vs {other.context.describe()}"
            )

    def __add__(self, other):
        self._check_same_context(other)
        merged = dict(self._terms)
        for m, c in other._terms.items():
            merged[m] = merged.get(m, Fraction(0)) + c
        return self._new(merged)

    def __neg__(self):
        return self._new({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor: RationalLike):
        factor = Fraction(factor)
        if not factor:
            return self.zero(self.context)
        return self._new({m: c * factor for m, c in self._terms.items()})

    def __rmul__(self, factor):
        if isinstance(factor, (int, Fraction)):
            return self.scale(factor)
        return NotImplemented

    def __truediv__(self, divisor):
        if isinstance(divisor, (int, Fraction)):
            return self.scale(1 / Fraction(divisor))
        return NotImplemented

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.context == other.context and self._terms == other._terms

    __hash__ = None

    def __iter__(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)


class NElement(_Element):
    """Intersection-side element: polynomial in N^1, ..., N^{g-1}."""

    __slots__ = ()

    def _kills(self, monomial: Monomial) -> bool:
        return self.context.kills_newton(monomial)

    def bidegree_of(self, monomial: Monomial) -> Bidegree:
        return newton_bidegree(monomial)

    def exponent_vector(self, monomial: Monomial) -> Tuple[int, ...]:
        return tuple(monomial.count(i) for i in range(1, self.context.genus))

    def _sort_key(self, monomial: Monomial):
        return self.exponent_vector(monomial)

    @classmethod
    def one(cls, context: JacobianContext) -> "NElement":
        return cls(context, {(): 1})

    def __repr__(self) -> str:
        body = " + ".join(
            f"({c})" + ("*" + "*".join(f"N{i}" for i in m) if m else "") for m, c in self.items()
        )
        return f"NElement[{self.context.describe()}]({body or '0'})"


class PElement(_Element):
    """Convolution-side element: combination of Pontryagin monomials."""

    __slots__ = ()

    def _kills(self, monomial: Monomial) -> bool:
        return self.context.kills_pontryagin(monomial)

    def bidegree_of(self, monomial: Monomial) -> Bidegree:
        return pontryagin_bidegree(self.context.genus, monomial)

    def _sort_key(self, monomial: Monomial):
        return (len(monomial), monomial)

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*<{','.join(map(str, m))}>" for m, c in self.items())
        return f"PElement[{self.context.describe()}]({body or '0'})"
