import pytest
from fractions import Fraction

from src.models.context import Direction
from src.models.elements import KTuple, PElement
from src.services.newton_algebra import newton_basis
from src.services.pontryagin_basis import (
    component_in_ktuples,
    curve_class,
    expand_ktuple,
    fundamental_class,
    monomial_in_ktuples,
    p_scale,
    p_star_mul,
    p_star_power,
    point_class,
    pontryagin_basis,
    resolve_nodes,
    w_class_pontryagin,
)
from src.utils.exceptions import DomainError


def P(ctx, *parts, coeff=1):
    return PElement.monomial(ctx, parts, coeff)


def test_point_is_unit(genus_three):
    """<0> * <> = <0>"""
    assert p_star_mul(P(genus_three, 0), point_class(genus_three)) == P(genus_three, 0)
    assert p_star_mul(point_class(genus_three), point_class(genus_three)) == point_class(genus_three)


def test_star_product_survives(genus_four):
    """g=4: <0> * <1> = <0,1>"""
    assert p_star_mul(P(genus_four, 0), P(genus_four, 1)) == P(genus_four, 0, 1)


def test_star_product_killed(genus_three):
    """g=3: <0,1> has level 1 = codimension 1 and vanishes"""
    assert p_star_mul(P(genus_three, 0), P(genus_three, 1)).is_zero()


def test_star_product_degree_law(make_context):
    """Codimensions add up minus g"""
    ctx = make_context(5)
    basis = pontryagin_basis(ctx)
    for m1 in basis:
        for m2 in basis:
            product = p_star_mul(P(ctx, *m1), P(ctx, *m2))
            for p, _ in product.bidegrees():
                assert p == (5 - len(m1)) + (5 - len(m2)) - 5


def test_star_product_commutative_associative(make_context):
    """* is commutative and associative"""
    ctx = make_context(5)
    a = P(ctx, 0) + P(ctx, 1, coeff=Fraction(1, 2))
    b = P(ctx, 0, 0) - P(ctx, 2)
    c = P(ctx, 1) + point_class(ctx)
    assert p_star_mul(a, b) == p_star_mul(b, a)
    assert p_star_mul(p_star_mul(a, b), c) == p_star_mul(a, p_star_mul(b, c))


def test_expand_single_pushforward(genus_three):
    """g=3: 2_* C = 4<0> + 8<1>"""
    assert expand_ktuple(genus_three, [2]) == P(genus_three, 0, coeff=4) + P(genus_three, 1, coeff=8)


def test_expand_genus_two(genus_two):
    """g=2: only level 0 exists"""
    assert expand_ktuple(genus_two, [1, 1]) == P(genus_two, 0, 0)


def test_expand_zero_entry(genus_three):
    """The zero map collapses the curve"""
    assert expand_ktuple(genus_three, [0]).is_zero()
    assert expand_ktuple(genus_three, [2, 0]).is_zero()


@pytest.mark.parametrize("genus", range(2, 8))
def test_expand_ones_top_part(make_context, genus):
    """[1]*g expands to <0^g>"""
    ctx = make_context(genus)
    assert expand_ktuple(ctx, [1] * genus) == P(ctx, *([0] * genus))


def test_expand_permutation_invariant(make_context):
    """Order of the multipliers is irrelevant"""
    ctx = make_context(5)
    assert expand_ktuple(ctx, [3, 1, 2]) == expand_ktuple(ctx, [1, 2, 3])
    assert KTuple([3, 1, 2]) == KTuple([1, 2, 3])


def test_expand_respects_gonality(make_context):
    """With d = 3 no part exceeds 1"""
    ctx = make_context(6, 3)
    expanded = expand_ktuple(ctx, [1, 2, 3])
    assert not expanded.is_zero()
    assert all(max(m, default=0) <= 1 for m in expanded.terms)


def test_components_genus_two(genus_two):
    """g=2: C_(0) = [1]"""
    assert component_in_ktuples(genus_two, 0) == [(Fraction(1), KTuple([1]))]


def test_components_genus_three(genus_three):
    """g=3: C_(0) = 2[1] - [2]/4, C_(1) = -[1] + [2]/4"""
    assert component_in_ktuples(genus_three, 0) == [(Fraction(2), KTuple([1])), (Fraction(-1, 4), KTuple([2]))]
    assert component_in_ktuples(genus_three, 1) == [(Fraction(-1), KTuple([1])), (Fraction(1, 4), KTuple([2]))]


def test_component_out_of_range(genus_three):
    """Levels run over 0..g-2"""
    with pytest.raises(DomainError):
        component_in_ktuples(genus_three, 2)


@pytest.mark.parametrize("genus", range(2, 11))
def test_bridge_round_trip(make_context, genus):
    """Expanding the Vandermonde combination gives back C_(s), for two node sets"""
    ctx = make_context(genus)
    for nodes in (None, tuple(range(2, genus + 1))):
        for s in range(genus - 1):
            total = PElement.zero(ctx)
            for coeff, kt in component_in_ktuples(ctx, s, nodes):
                total = total + expand_ktuple(ctx, kt).scale(coeff)
            assert total == P(ctx, s)


def test_monomial_round_trip(make_context):
    """A product of components re-expands to itself"""
    ctx = make_context(5)
    for parts in [(0, 1), (0, 2), (1, 1), (0, 0, 1)]:
        total = PElement.zero(ctx)
        for kt, coeff in monomial_in_ktuples(ctx, parts).items():
            total = total + expand_ktuple(ctx, kt).scale(coeff)
        assert total == P(ctx, *parts)


def test_node_set_must_match_component_count(make_context):
    """Overrides need one node per component"""
    ctx = make_context(4)
    assert resolve_nodes(ctx, None) == (1, 2, 3)
    assert resolve_nodes(ctx, [2, 3, 4]) == (2, 3, 4)
    with pytest.raises(DomainError):
        resolve_nodes(ctx, [1, 2])
    assert resolve_nodes(make_context(6, 3), None) == (1, 2)


def test_scaling_examples(make_context):
    """k_* by k^(2r+t), k^* by k^(2(g-r)-t)"""
    ctx = make_context(4)
    assert p_scale(P(ctx, 0), 2, Direction.PUSHFORWARD) == P(ctx, 0, coeff=4)
    assert p_scale(P(ctx, 1), -1, Direction.PULLBACK) == -P(ctx, 1)


@pytest.mark.parametrize("k", range(-3, 4))
def test_pushforward_star_multiplicative(make_context, k):
    """k_*(a * b) = k_* a * k_* b"""
    ctx = make_context(5)
    a = P(ctx, 0) + P(ctx, 1, coeff=3)
    b = P(ctx, 0, 1) - P(ctx, 2) + point_class(ctx)
    lhs = p_scale(p_star_mul(a, b), k, Direction.PUSHFORWARD)
    rhs = p_star_mul(p_scale(a, k, Direction.PUSHFORWARD), p_scale(b, k, Direction.PUSHFORWARD))
    assert lhs == rhs


def test_fundamental_class(genus_two):
    """g=2: [J] = <0,0>/2"""
    assert fundamental_class(genus_two) == P(genus_two, 0, 0, coeff=Fraction(1, 2))


@pytest.mark.parametrize("genus", range(2, 7))
def test_w0_is_fundamental_class(make_context, genus):
    """C^{*g}/g! = [J]"""
    ctx = make_context(genus)
    assert w_class_pontryagin(ctx, genus) == fundamental_class(ctx)
    assert w_class_pontryagin(ctx, 0) == point_class(ctx)
    assert w_class_pontryagin(ctx, 1) == curve_class(ctx)


def test_curve_class_under_gonality(make_context):
    """C has components up to d-2"""
    assert curve_class(make_context(5, 3)) == P(make_context(5, 3), 0) + P(make_context(5, 3), 1)


@pytest.mark.parametrize("genus,gonality", [(g, None) for g in range(2, 7)] + [(5, 2), (6, 3), (6, 4)])
def test_basis_sizes_match_newton_side(make_context, genus, gonality):
    """Surviving monomials correspond one-to-one across the two sides"""
    ctx = make_context(genus, gonality)
    assert len(pontryagin_basis(ctx)) == len(newton_basis(ctx))


def test_star_power(genus_three):
    """<0>^{*3} = <0,0,0>"""
    assert p_star_power(P(genus_three, 0), 3) == P(genus_three, 0, 0, 0)


def test_node_override_is_logged(genus_four, caplog):
    with caplog.at_level("DEBUG", logger="src.services.pontryagin_basis"):
        assert resolve_nodes(genus_four, [2, 3, 5]) == (2, 3, 5)
    assert "[nodes] using override [2, 3, 5]" in caplog.text
