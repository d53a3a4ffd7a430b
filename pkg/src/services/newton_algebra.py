"""
Intersection side of the tautological ring.

The ring is modelled as the polynomial algebra on N^1, ..., N^{g-1},
truncated by the context's kill rules and otherwise free: no curve-specific
relation is imposed. Vanishing in this model therefore implies vanishing
for every curve of the given genus (and gonality), while non-vanishing is
only an upper bound.
"""
import logging
from fractions import Fraction
from math import factorial
from typing import Dict, List, Sequence

from src.models.context import Direction, JacobianContext, scaling_exponent
from src.models.elements import Monomial, NElement
from src.utils.exceptions import DomainError

logger = logging.getLogger(__name__)


def n_mul(a: NElement, b: NElement) -> NElement:
    """Intersection product; bidegrees add, kill rules applied."""
    a._check_same_context(b)
    g = a.context.genus
    out: Dict[Monomial, Fraction] = {}
    for m1, c1 in a.terms.items():
        p1 = sum(m1)
        for m2, c2 in b.terms.items():
            if p1 + sum(m2) > g:
                continue
            key = tuple(sorted(m1 + m2))
            out[key] = out.get(key, Fraction(0)) + c1 * c2
    return NElement(a.context, out)


def n_power(x: NElement, exponent: int) -> NElement:
    if exponent < 0:
        raise DomainError(f"Negative exponent {exponent}")
    result = NElement.one(x.context)
    for _ in range(exponent):
        result = n_mul(result, x)
    return result


def newton_class(context: JacobianContext, k: int) -> NElement:
    """N^k: the generator for k <= g-1, zero for k = g (and for k >= d under gonality d)."""
    if not 1 <= k <= context.genus:
        raise DomainError(f"newton_class needs 1 <= k <= g, got k={k} ({context.describe()})")
    return NElement.monomial(context, (k,))


def _power_sum(context: JacobianContext, k: int) -> NElement:
    # p_k = k! N^k, with p_k = 0 for k >= g
    if k >= context.genus:
        return NElement.zero(context)
    return newton_class(context, k).scale(factorial(k))


def w_classes(context: JacobianContext, top: int) -> List[NElement]:
    """[w^0, ..., w^top] through Newton's identities k e_k = sum (-1)^(i-1) e_{k-i} p_i."""
    e = [NElement.one(context)]
    power_sums = [None] + [_power_sum(context, i) for i in range(1, top + 1)]
    for n in range(1, top + 1):
        acc = NElement.zero(context)
        for i in range(1, n + 1):
            term = n_mul(e[n - i], power_sums[i])
            acc = acc + term if i % 2 == 1 else acc - term
        e.append(acc.scale(Fraction(1, n)))
    logger.debug(
        "[newton] w classes computed",
        extra={"context": context.describe(), "top": top, "terms": [len(x) for x in e]},
    )
    return e


def w_class(context: JacobianContext, d: int) -> NElement:
    """w^d (the class of W_{g-d}) as a polynomial in the Newton classes."""
    if not 0 <= d <= context.genus:
        raise DomainError(f"w_class needs 0 <= d <= g, got d={d} ({context.describe()})")
    return w_classes(context, d)[d]


def newton_from_w_classes(context: JacobianContext, k: int, w: Sequence[NElement]) -> NElement:
    """
    Re-derive N^k from w^0..w^k:
    p_k = (-1)^(k-1) k e_k + sum_{i<k} (-1)^(k+i-1) e_{k-i} p_i,  N^k = p_k / k!
    """
    if not 1 <= k <= context.genus or len(w) <= k:
        raise DomainError(f"newton_from_w_classes needs 1 <= k <= g and w^0..w^k (k={k})")
    p: List[NElement] = [NElement.zero(context)]
    for n in range(1, k + 1):
        acc = w[n].scale(n if n % 2 == 1 else -n)
        for i in range(1, n):
            term = n_mul(w[n - i], p[i])
            acc = acc + term if (n + i - 1) % 2 == 0 else acc - term
        p.append(acc)
    return p[k].scale(Fraction(1, factorial(k)))


def n_bidegree_project(x: NElement, p: int, s: int) -> NElement:
    return x.project(p, s)


def n_scale(x: NElement, k: int, direction: Direction) -> NElement:
    """k^* or k_* on each bidegree-homogeneous piece; 0^0 = 1."""
    g = x.context.genus
    out: Dict[Monomial, Fraction] = {}
    for monomial, coeff in x.terms.items():
        p, s = x.bidegree_of(monomial)
        out[monomial] = coeff * k ** scaling_exponent(g, p, s, Direction(direction))
    return NElement(x.context, out)


def newton_basis(context: JacobianContext) -> List[Monomial]:
    """All surviving Newton monomials, in canonical order."""
    basis: List[Monomial] = []

    def extend(prefix: Monomial, smallest: int, budget: int) -> None:
        if not context.kills_newton(prefix):
            basis.append(prefix)
        for i in range(smallest, min(context.max_generator, budget) + 1):
            extend(prefix + (i,), i, budget - i)

    extend((), 1, context.genus)
    ordered = NElement(context, {m: 1 for m in basis})
    return [m for m, _ in ordered.items()]


def sum_of_generators(context: JacobianContext) -> NElement:
    """N^1 + ... + N^{g-1}"""
    return NElement(context, {(k,): 1 for k in range(1, context.genus)})
