import pytest
from fractions import Fraction
from math import factorial

from src.models.elements import KTuple, PElement
from src.services.pontryagin_basis import (
    expand_ktuple,
    fundamental_class,
    point_class,
    pontryagin_basis,
)
from src.services.theta_calculus import ThetaCalculus, theta_mul_ktuple
from src.utils.exceptions import DomainError


def P(ctx, *parts, coeff=1):
    return PElement.monomial(ctx, parts, coeff)


def collect(pairs):
    out = {}
    for coeff, kt in pairs:
        out[kt] = out.get(kt, 0) + coeff
    return {kt: c for kt, c in out.items() if c}


@pytest.mark.parametrize("genus", [2, 3, 7])
def test_base_case(genus):
    """theta . C = g [pt]"""
    assert theta_mul_ktuple(genus, [1]) == [(Fraction(genus), KTuple())]


@pytest.mark.parametrize("k", [2, -3, 5])
def test_base_case_pushforward(k):
    """theta . k_*C = g k^2 [pt]"""
    assert theta_mul_ktuple(4, [k]) == [(Fraction(4 * k * k), KTuple())]


def test_two_curves_genus_two():
    """g=2: theta . [1,1] = 6[1] - [2], with the two omissions already combined"""
    assert theta_mul_ktuple(2, [1, 1]) == [(Fraction(6), KTuple([1])), (Fraction(-1), KTuple([2]))]


@pytest.mark.parametrize("kt", [[1, 1, 1], [2, 2, -1], [1, 2, 1, 2]])
def test_recursion_output_is_collected(kt):
    """Each KTuple appears once and no coefficient is zero"""
    result = theta_mul_ktuple(6, kt)
    images = [image for _, image in result]
    assert len(images) == len(set(images))
    assert all(coeff for coeff, _ in result)


def test_merge_to_zero_dropped():
    """A merged entry k_i + k_j = 0 is the zero class"""
    result = collect(theta_mul_ktuple(3, [1, -1]))
    assert KTuple([0]) not in result
    assert set(result) == {KTuple([1]), KTuple([-1])}


def test_zero_entry_rejected():
    """Zero entries are filtered by callers"""
    with pytest.raises(DomainError):
        theta_mul_ktuple(3, [0, 1])


def test_recursion_permutation_invariant():
    """Input order does not change the output multiset"""
    assert sorted(theta_mul_ktuple(5, [1, 2, 3])) == sorted(theta_mul_ktuple(5, [3, 1, 2]))


def test_theta_squared_genus_two(genus_two):
    """g=2: theta . <0> = 2 [pt]"""
    calc = ThetaCalculus(genus_two)
    assert calc.theta_mul(P(genus_two, 0)) == point_class(genus_two).scale(2)


def test_theta_kills_point(genus_three):
    """theta . [pt] = 0"""
    assert ThetaCalculus(genus_three).theta_mul(point_class(genus_three)).is_zero()


@pytest.mark.parametrize("genus", range(2, 9))
def test_unit_law(make_context, genus):
    """theta . [J] = <0^(g-1)>/(g-1)!"""
    ctx = make_context(genus)
    calc = ThetaCalculus(ctx)
    expected = P(ctx, *([0] * (genus - 1)), coeff=Fraction(1, factorial(genus - 1)))
    assert calc.theta_mul(fundamental_class(ctx)) == expected


@pytest.mark.parametrize("genus", range(2, 9))
def test_poincare_degree(make_context, genus):
    """theta^g = g! [pt] and theta^(g+1) = 0"""
    ctx = make_context(genus)
    calc = ThetaCalculus(ctx)
    assert calc.theta_power(0) == fundamental_class(ctx)
    assert calc.intersection_number(calc.theta_power(genus)) == factorial(genus)
    assert calc.theta_power(genus) == point_class(ctx).scale(factorial(genus))
    assert calc.theta_power(genus + 1).is_zero()


def test_negative_power_rejected(genus_three):
    """theta^j needs j >= 0"""
    with pytest.raises(DomainError):
        ThetaCalculus(genus_three).theta_power(-1)


def test_intersection_number(genus_three):
    """Degree of 0-cycles; other codimensions are rejected"""
    calc = ThetaCalculus(genus_three)
    assert calc.intersection_number(point_class(genus_three)) == 1
    assert calc.intersection_number(PElement.zero(genus_three)) == 0
    with pytest.raises(DomainError):
        calc.intersection_number(P(genus_three, 0))


@pytest.mark.parametrize("genus", range(2, 7))
def test_degree_of_pushed_curve(make_context, genus):
    """deg theta . k_*C = g k^2"""
    ctx = make_context(genus)
    calc = ThetaCalculus(ctx)
    for k in range(1, 6):
        assert calc.intersection_number(calc.theta_mul(expand_ktuple(ctx, [k]))) == genus * k * k


@pytest.mark.parametrize("genus", range(2, 7))
def test_level_preserved(make_context, genus):
    """theta raises codimension by one and keeps the level"""
    ctx = make_context(genus)
    calc = ThetaCalculus(ctx)
    for monomial in pontryagin_basis(ctx):
        x = P(ctx, *monomial)
        ((p, s),) = x.bidegrees()
        assert calc.theta_mul(x).bidegrees() <= {(p + 1, s)}


@pytest.mark.parametrize("genus", range(2, 7))
def test_node_set_independence(make_context, genus):
    """Nodes 1..g-1 and 2..g give identical products"""
    ctx = make_context(genus)
    default = ThetaCalculus(ctx)
    shifted = ThetaCalculus(ctx, range(2, genus + 1))
    for monomial in pontryagin_basis(ctx):
        x = P(ctx, *monomial)
        assert default.theta_mul(x) == shifted.theta_mul(x)


def test_bad_node_set(genus_three):
    """Node overrides must have one node per component"""
    with pytest.raises(DomainError):
        ThetaCalculus(genus_three, [1, 2, 3])


def test_exp_theta_on_point(genus_three):
    """e^theta . [pt] = [pt]"""
    calc = ThetaCalculus(genus_three)
    assert calc.exp_theta_mul(point_class(genus_three)) == point_class(genus_three)


def test_exp_theta_convolve_point(genus_three):
    """[pt] * e^theta = e^theta"""
    calc = ThetaCalculus(genus_three)
    expected = PElement.zero(genus_three)
    for j in range(4):
        expected = expected + calc.theta_power(j).scale(Fraction(1, factorial(j)))
    assert calc.exp_theta_convolve(point_class(genus_three), 1) == expected
    assert calc.exp_theta_mul(fundamental_class(genus_three)) == expected


def test_exp_theta_convolve_genus_two(genus_two):
    """g=2: (<0> + 2[pt]) * e^-theta = -<0> + 2[pt]"""
    calc = ThetaCalculus(genus_two)
    x = P(genus_two, 0) + point_class(genus_two).scale(2)
    assert calc.exp_theta_convolve(x, -1) == -P(genus_two, 0) + point_class(genus_two).scale(2)


def test_exp_theta_convolve_sign(genus_two):
    """sign must be +1 or -1"""
    with pytest.raises(DomainError):
        ThetaCalculus(genus_two).exp_theta_convolve(point_class(genus_two), 2)


def test_chain_coefficients_hyperelliptic(make_context):
    """theta . <0^a> = a(g-a+1) <0^(a-1)> with d = 2"""
    ctx = make_context(6, 2)
    calc = ThetaCalculus(ctx)
    for a in range(1, 7):
        lam, clean = calc.chain_coefficient((0,) * a)
        assert lam == a * (6 - a + 1)
        assert clean


def test_chain_coefficients_trigonal(make_context):
    """theta . <0^a 1^b> = a(g+1-a-3b) <0^(a-1) 1^b> with d = 3"""
    ctx = make_context(7, 3)
    calc = ThetaCalculus(ctx)
    for a, b in [(1, 0), (4, 1), (2, 1), (1, 2), (3, 0)]:
        lam, clean = calc.chain_coefficient((0,) * a + (1,) * b)
        assert lam == a * (7 + 1 - a - 3 * b)
        assert clean
