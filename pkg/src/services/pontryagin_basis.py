"""
Convolution side: Pontryagin monomials <s1, ..., sr> = C_(s1) * ... * C_(sr).

Pushforward by k acts on the curve class as k_* C = sum_s k^(2+s) C_(s),
so a product (k1_* C) * ... * (kr_* C) expands multilinearly. The inverse
direction, writing each C_(s) through the classes k_* C, is a Vandermonde
inversion over a node set of multipliers.
"""
import logging
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from src.models.context import Direction, JacobianContext, scaling_exponent
from src.models.elements import KTuple, Monomial, PElement
from src.services import table_cache
from src.utils.exceptions import DomainError
from src.utils.exact_kernel import vandermonde_coefficients

logger = logging.getLogger(__name__)

# k_* C = sum_s k^(CURVE_OFFSET + s) C_(s): C has codimension g-1.
CURVE_OFFSET = 2


def point_class(context: JacobianContext) -> PElement:
    """[pt] = w^g = <>, the unit for *."""
    return PElement.monomial(context, ())


def fundamental_class(context: JacobianContext) -> PElement:
    """[J] = <0,...,0>/g! (g zeros), the unit for the intersection product."""
    return PElement.monomial(context, (0,) * context.genus, Fraction(1, factorial(context.genus)))


def curve_class(context: JacobianContext) -> PElement:
    """C = sum_s C_(s)."""
    return PElement(context, {(s,): 1 for s in range(context.max_part + 1)})


def p_star_mul(a: PElement, b: PElement) -> PElement:
    """Pontryagin product: concatenate parts; codimensions add up minus g."""
    a._check_same_context(b)
    g = a.context.genus
    out: Dict[Monomial, Fraction] = {}
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            if len(m1) + len(m2) > g:
                continue
            key = tuple(sorted(m1 + m2))
            out[key] = out.get(key, Fraction(0)) + c1 * c2
    return PElement(a.context, out)


def p_star_power(x: PElement, exponent: int) -> PElement:
    if exponent < 0:
        raise DomainError(f"Negative exponent {exponent}")
    result = point_class(x.context)
    for _ in range(exponent):
        result = p_star_mul(result, x)
    return result


def w_class_pontryagin(context: JacobianContext, d: int) -> PElement:
    """w^{g-d} = C^{*d} / d!"""
    if not 0 <= d <= context.genus:
        raise DomainError(f"w_class_pontryagin needs 0 <= d <= g, got d={d}")
    return p_star_power(curve_class(context), d).scale(Fraction(1, factorial(d)))


def p_scale(x: PElement, k: int, direction: Direction) -> PElement:
    """k^* by k^(2(g-r)-t), k_* by k^(2r+t) on <s1..sr> of level t."""
    g = x.context.genus
    out: Dict[Monomial, Fraction] = {}
    for monomial, coeff in x.terms.items():
        p, s = x.bidegree_of(monomial)
        out[monomial] = coeff * k ** scaling_exponent(g, p, s, Direction(direction))
    return PElement(x.context, out)


def _expand_terms(context: JacobianContext, kt: KTuple) -> Dict[Monomial, Fraction]:
    g = context.genus
    r = len(kt)
    if r > g or kt.is_zero:
        return {}
    levels = range(context.max_part + 1)
    partial: Dict[Monomial, Fraction] = {(): Fraction(1)}
    for k in kt:
        factor = [(s, Fraction(k) ** (CURVE_OFFSET + s)) for s in levels]
        grown: Dict[Monomial, Fraction] = {}
        for parts, coeff in partial.items():
            t0 = sum(parts)
            for s, weight in factor:
                t = t0 + s
                # level only grows from here on; the final monomial has r parts
                if t > 0 and t >= g - r:
                    continue
                key = tuple(sorted(parts + (s,)))
                grown[key] = grown.get(key, Fraction(0)) + coeff * weight
        partial = grown
    return partial


def expand_ktuple(context: JacobianContext, kt: Sequence[int]) -> PElement:
    """(k1_* C) * ... * (kr_* C) in the Pontryagin basis."""
    key = KTuple(kt)
    terms = table_cache.cached_call(
        "expand_ktuple", (context, key), lambda: _expand_terms(context, key)
    )
    return PElement(context, terms)


def default_nodes(context: JacobianContext) -> Tuple[int, ...]:
    return tuple(range(1, context.component_count + 1))


def resolve_nodes(context: JacobianContext, nodes: Optional[Sequence[int]]) -> Tuple[int, ...]:
    if nodes is None:
        return default_nodes(context)
    nodes = tuple(int(k) for k in nodes)
    if len(nodes) != context.component_count:
        raise DomainError(
            f"Node set {list(nodes)} must have exactly {context.component_count} entries "
            f"({context.describe()})"
        )
    logger.debug(f"[nodes] using override {list(nodes)}", extra={"context": context.describe()})
    return nodes


def coefficient_table(context: JacobianContext, nodes: Optional[Sequence[int]] = None):
    nodes = resolve_nodes(context, nodes)
    return nodes, table_cache.cached_call(
        "vandermonde", (context.component_count, nodes),
        lambda: vandermonde_coefficients(nodes, CURVE_OFFSET),
    )


def component_in_ktuples(
    context: JacobianContext, s: int, nodes: Optional[Sequence[int]] = None
) -> List[Tuple[Fraction, KTuple]]:
    """C_(s) = sum_k c_{s,k} (k_* C) over the node set."""
    if not 0 <= s <= context.max_part:
        raise DomainError(
            f"component_in_ktuples needs 0 <= s <= {context.max_part}, got s={s} ({context.describe()})"
        )
    nodes, table = coefficient_table(context, nodes)
    return [(table[s][i], KTuple((k,))) for i, k in enumerate(nodes) if table[s][i]]


def monomial_in_ktuples(
    context: JacobianContext, parts: Sequence[int], nodes: Optional[Sequence[int]] = None
) -> Dict[KTuple, Fraction]:
    """<s1..sr> as a combination of KTuples (products of the per-part expansions)."""
    rows = {s: component_in_ktuples(context, s, nodes) for s in set(parts)}
    combos: Dict[KTuple, Fraction] = {KTuple(): Fraction(1)}
    for s in parts:
        grown: Dict[KTuple, Fraction] = {}
        for kt, coeff in combos.items():
            for c, single in rows[s]:
                key = KTuple(kt + single)
                grown[key] = grown.get(key, Fraction(0)) + coeff * c
        combos = {kt: c for kt, c in grown.items() if c}
    return combos


def pontryagin_basis(context: JacobianContext) -> List[Monomial]:
    """All surviving Pontryagin monomials, ordered by length then parts."""
    basis: List[Monomial] = []
    levels = range(context.max_part + 1)
    for r in range(context.genus + 1):
        for parts in combinations_with_replacement(levels, r):
            if not context.kills_pontryagin(parts):
                basis.append(parts)
    return basis
