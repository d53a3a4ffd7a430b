"""
Multiplication by theta on the convolution side.

For u: C^r -> J, (x1..xr) -> sum k_i x_i we have
theta . u_*[C^r] = u_*(u^* theta), and modulo algebraic equivalence

    u^* theta = sum_i (g k_i^2 + k_i (K - k_i)) q_i^* o  -  sum_{i<j} k_i k_j Delta_ij

with K = sum k_i (phi^* theta is a degree-g divisor, hence g.o, and the
Poincare class restricts to Delta - C x o - o x C on C^2). Pushing forward,
q_i^* o drops k_i and Delta_ij merges k_i, k_j into k_i + k_j.
"""
import logging
from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from src.models.context import JacobianContext
from src.models.elements import KTuple, Monomial, PElement
from src.services import table_cache
from src.services.pontryagin_basis import (
    expand_ktuple,
    fundamental_class,
    monomial_in_ktuples,
    p_star_mul,
    resolve_nodes,
)
from src.utils.exceptions import DomainError


def theta_mul_ktuple(genus: int, kt: Sequence[int]) -> List[Tuple[Fraction, KTuple]]:
    """
    theta . [k1..kr] as a list of (coefficient, KTuple), one entry per
    distinct KTuple in first-seen order. Zero merges and cancelled terms
    are dropped.
    """
    entries = [int(k) for k in kt]
    if any(k == 0 for k in entries):
        raise DomainError(f"theta_mul_ktuple needs nonzero entries, got {entries}")
    total = sum(entries)
    gathered: Dict[KTuple, Fraction] = {}

    def add(coeff: int, image: KTuple) -> None:
        gathered[image] = gathered.get(image, Fraction(0)) + coeff

    for i, k in enumerate(entries):
        add(genus * k * k + k * (total - k), KTuple(entries[:i] + entries[i + 1:]))
    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            merged = entries[i] + entries[j]
            if merged == 0:
                continue
            rest = [k for n, k in enumerate(entries) if n != i and n != j]
            add(-entries[i] * entries[j], KTuple(rest + [merged]))
    return [(coeff, image) for image, coeff in gathered.items() if coeff]


class ThetaCalculus:
    """
    theta-multiplication and its consequences for one context and node set.

    Results do not depend on the node set; it is a knob so that this can
    be checked.
    """

    def __init__(self, context: JacobianContext, nodes: Optional[Sequence[int]] = None):
        self.context = context
        self.nodes = resolve_nodes(context, nodes)
        self.logger = logging.getLogger(__name__)
        self._powers: List[PElement] = [fundamental_class(context)]

    def _theta_on_monomial(self, parts: Monomial) -> Dict[Monomial, Fraction]:
        genus = self.context.genus
        gathered: Dict[KTuple, Fraction] = {}
        for kt, coeff in monomial_in_ktuples(self.context, parts, self.nodes).items():
            for c, image in theta_mul_ktuple(genus, kt):
                gathered[image] = gathered.get(image, Fraction(0)) + coeff * c

        out: Dict[Monomial, Fraction] = {}
        for image, coeff in gathered.items():
            if not coeff:
                continue
            for monomial, c in expand_ktuple(self.context, image).terms.items():
                out[monomial] = out.get(monomial, Fraction(0)) + coeff * c
        return {m: c for m, c in out.items() if c}

    def theta_on_monomial(self, parts: Monomial) -> PElement:
        key = (self.context, self.nodes, tuple(parts))
        terms = table_cache.cached_call(
            "theta_monomial", key, lambda: self._theta_on_monomial(tuple(parts))
        )
        return PElement(self.context, terms)

    def theta_mul(self, x: PElement) -> PElement:
        """theta . x; codimension rises by one, levels are preserved."""
        if x.context != self.context:
            raise DomainError(
                f"Element context {x.context.describe()} differs from calculator context {self.context.describe()}"
            )
        result = PElement.zero(self.context)
        for monomial, coeff in x.terms.items():
            result = result + self.theta_on_monomial(monomial).scale(coeff)
        return result

    def theta_power(self, j: int) -> PElement:
        """theta^j, folded from theta^0 = [J]."""
        if j < 0:
            raise DomainError(f"theta_power needs j >= 0, got {j}")
        while len(self._powers) <= j:
            self._powers.append(self.theta_mul(self._powers[-1]))
            self.logger.debug(
                "[theta] power computed",
                extra={"context": self.context.describe(), "power": len(self._powers) - 1},
            )
        return self._powers[j]

    def intersection_number(self, x: PElement) -> Fraction:
        """Degree of a codimension-g class: the coefficient of <>."""
        stray = [m for m in x.terms if m != ()]
        if stray:
            raise DomainError(
                f"intersection_number needs a codimension-{self.context.genus} class; "
                f"found monomials {stray}"
            )
        return x.coefficient(())

    def exp_theta_mul(self, x: PElement) -> PElement:
        """e^theta . x; the series stops once codimension passes g."""
        total = x
        term = x
        j = 1
        while not term.is_zero():
            term = self.theta_mul(term).scale(Fraction(1, j))
            total = total + term
            j += 1
        return total

    def exp_theta_convolve(self, x: PElement, sign: int) -> PElement:
        """x * e^(sign theta) = sum_j sign^j (theta^j * x) / j!"""
        if sign not in (1, -1):
            raise DomainError(f"sign must be +1 or -1, got {sign}")
        total = PElement.zero(self.context)
        for j in range(self.context.genus + 1):
            term = p_star_mul(self.theta_power(j), x).scale(Fraction(sign ** j, factorial(j)))
            total = total + term
        return total

    def chain_coefficient(self, parts: Monomial) -> Tuple[Fraction, bool]:
        """
        For theta . <0^a ...> = lambda . <0^(a-1) ...>, return (lambda, clean) where
        clean is False when the product has other terms.
        """
        image = self.theta_on_monomial(parts)
        if not parts or parts[0] != 0:
            return Fraction(0), image.is_zero()
        target = parts[1:]
        lam = image.coefficient(target)
        return lam, len(image) == (1 if lam else 0)
