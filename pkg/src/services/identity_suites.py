"""
Named groups of identity checks, run against one context.

Randomized checks draw from a random.Random seeded with
settings.RANDOM_SEED, so a suite produces the same report every time.
"""
import logging
import random
from fractions import Fraction
from math import factorial
from typing import Callable, Dict, List, Optional, Sequence

from src.models.context import Direction, JacobianContext
from src.models.elements import KTuple, NElement, PElement
from src.models.response_models import IdentityCheck, SuiteReport, SuiteResult
from src.services.fourier_bridge import (
    verify_bidegree_law,
    verify_convolution_law,
    verify_curve_fourier,
    verify_double_fourier,
    verify_dual_formula,
    verify_fourier_of_wd,
    verify_point_fourier,
    verify_product_law,
)
from src.services.newton_algebra import n_mul, n_scale, newton_basis
from src.services.pontryagin_basis import (
    expand_ktuple,
    fundamental_class,
    p_scale,
    p_star_mul,
    pontryagin_basis,
)
from src.services.theta_calculus import ThetaCalculus
from src.utils.config import settings
from src.utils.exceptions import DomainError

SUITE_ORDER = ("fourier", "convolution", "dual", "poincare", "scaling", "nodes")
SCALING_FACTORS = range(-3, 4)


def _passed(identity: str, ok: bool, detail: Optional[str] = None) -> IdentityCheck:
    return IdentityCheck(identity=identity, passed=bool(ok), detail=None if ok else detail)


class IdentitySuiteRunner:
    """Runs the suites for one context; holds the calculator and the seeded generator."""

    def __init__(self, context: JacobianContext, nodes: Optional[Sequence[int]] = None):
        self.context = context
        self.calculus = ThetaCalculus(context, nodes)
        self.rng = random.Random(settings.RANDOM_SEED)
        self.logger = logging.getLogger(__name__)
        self._n_basis = newton_basis(context)
        self._p_basis = pontryagin_basis(context)

    # --- random elements --------------------------------------------------

    def _coefficient(self) -> Fraction:
        return Fraction(self.rng.randint(-5, 5), self.rng.randint(1, 4))

    def random_newton(self, size: int = 4) -> NElement:
        picks = self.rng.sample(self._n_basis, min(size, len(self._n_basis)))
        return NElement(self.context, {m: self._coefficient() for m in picks})

    def random_pontryagin(self, size: int = 4) -> PElement:
        picks = self.rng.sample(self._p_basis, min(size, len(self._p_basis)))
        return PElement(self.context, {m: self._coefficient() for m in picks})

    # --- suites -----------------------------------------------------------

    def fourier(self) -> List[IdentityCheck]:
        checks: List[IdentityCheck] = []
        for monomial in self._n_basis:
            x = NElement.monomial(self.context, monomial)
            checks.append(verify_double_fourier(x))
            checks.append(verify_bidegree_law(x))
        checks.append(verify_curve_fourier(self.context))
        checks.append(verify_point_fourier(self.context))
        for d in range(self.context.genus + 1):
            checks.append(verify_fourier_of_wd(self.context, d))
        return checks

    def convolution(self) -> List[IdentityCheck]:
        checks: List[IdentityCheck] = []
        for _ in range(settings.RANDOM_PAIRS_PER_GENUS):
            checks.append(verify_convolution_law(self.random_pontryagin(), self.random_pontryagin()))
            checks.append(verify_product_law(self.random_newton(), self.random_newton()))
        return checks

    def dual(self) -> List[IdentityCheck]:
        return [verify_dual_formula(self.calculus, r) for r in range(self.context.genus + 1)]

    def poincare(self) -> List[IdentityCheck]:
        g = self.context.genus
        calc = self.calculus
        degree = calc.intersection_number(calc.theta_power(g))
        checks = [
            _passed(f"theta^{g} = {g}! [pt]", degree == factorial(g), f"degree {degree}"),
            _passed(f"theta^{g + 1} = 0", calc.theta_power(g + 1).is_zero(), repr(calc.theta_power(g + 1))),
        ]
        unit = calc.theta_mul(fundamental_class(self.context))
        expected = PElement.monomial(self.context, (0,) * (g - 1), Fraction(1, factorial(g - 1)))
        checks.append(_passed("theta.[J] = theta", unit == expected, repr(unit)))
        for k in range(1, 6):
            value = calc.intersection_number(calc.theta_mul(expand_ktuple(self.context, KTuple((k,)))))
            checks.append(_passed(f"deg theta.k_*C = g k^2 (k={k})", value == g * k * k, f"got {value}"))
        return checks

    def scaling(self) -> List[IdentityCheck]:
        g = self.context.genus
        checks: List[IdentityCheck] = []
        for k in SCALING_FACTORS:
            x, y = self.random_newton(), self.random_newton()
            a, b = self.random_pontryagin(), self.random_pontryagin()

            round_trip = n_scale(n_scale(x, k, Direction.PUSHFORWARD), k, Direction.PULLBACK)
            checks.append(_passed(f"k^* k_* = k^(2g) on N (k={k})", round_trip == x.scale(k ** (2 * g)), repr(round_trip)))
            p_trip = p_scale(p_scale(a, k, Direction.PUSHFORWARD), k, Direction.PULLBACK)
            checks.append(_passed(f"k^* k_* = k^(2g) on P (k={k})", p_trip == a.scale(k ** (2 * g)), repr(p_trip)))

            lhs = p_scale(p_star_mul(a, b), k, Direction.PUSHFORWARD)
            rhs = p_star_mul(p_scale(a, k, Direction.PUSHFORWARD), p_scale(b, k, Direction.PUSHFORWARD))
            checks.append(_passed(f"k_* is *-multiplicative (k={k})", lhs == rhs, f"{lhs!r} vs {rhs!r}"))

            lhs = n_scale(n_mul(x, y), k, Direction.PULLBACK)
            rhs = n_mul(n_scale(x, k, Direction.PULLBACK), n_scale(y, k, Direction.PULLBACK))
            checks.append(_passed(f"k^* is .-multiplicative (k={k})", lhs == rhs, f"{lhs!r} vs {rhs!r}"))

        x = self.random_newton()
        twice = n_scale(n_scale(x, -1, Direction.PULLBACK), -1, Direction.PULLBACK)
        checks.append(_passed("(-1)^* is an involution", twice == x, repr(twice)))
        return checks

    def nodes(self) -> List[IdentityCheck]:
        c = self.context.component_count
        shifted = ThetaCalculus(self.context, tuple(range(2, c + 2)))
        checks: List[IdentityCheck] = []
        for monomial in self._p_basis:
            x = PElement.monomial(self.context, monomial)
            lhs, rhs = self.calculus.theta_mul(x), shifted.theta_mul(x)
            checks.append(_passed(f"theta.<{monomial}> independent of nodes", lhs == rhs, f"{lhs!r} vs {rhs!r}"))
        return checks

    def run(self, name: str) -> SuiteReport:
        suites: Dict[str, Callable[[], List[IdentityCheck]]] = {
            "fourier": self.fourier,
            "convolution": self.convolution,
            "dual": self.dual,
            "poincare": self.poincare,
            "scaling": self.scaling,
            "nodes": self.nodes,
        }
        if name == "all":
            names = list(SUITE_ORDER)
        elif name in suites:
            names = [name]
        else:
            raise DomainError(f"Unknown suite {name!r}; choose from {', '.join(SUITE_ORDER)} or all")

        results = []
        for suite_name in names:
            self.logger.info(f"[verify] running suite {suite_name}", extra={"context": self.context.describe()})
            result = SuiteResult(name=suite_name, checks=suites[suite_name]())
            if not result.passed:
                self.logger.warning(
                    f"[verify] suite {suite_name} failed",
                    extra={"failures": sum(1 for c in result.checks if not c.passed)},
                )
            results.append(result)

        return SuiteReport(
            genus=self.context.genus,
            gonality=self.context.gonality,
            suites=results,
            passed=all(r.passed for r in results),
        )


def run_suite(context: JacobianContext, name: str, nodes: Optional[Sequence[int]] = None) -> SuiteReport:
    return IdentitySuiteRunner(context, nodes).run(name)
