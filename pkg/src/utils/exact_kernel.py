"""
Exact rational arithmetic and the small linear-algebra helpers the
calculator needs. Nothing in the package ever rounds: coefficients are
``fractions.Fraction`` values, always kept in lowest terms.
"""
import re
from fractions import Fraction
from math import factorial
from typing import List, Sequence, Tuple, Union

from src.utils.exceptions import DomainError, ElementParseError

Rational = Fraction
RationalLike = Union[int, Fraction]

# Square table T[s][k], the inverse of the matrix (k^{offset+t})_{k,t}.
CoefficientTable = Tuple[Tuple[Fraction, ...], ...]

_RATIONAL_PATTERN = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def format_rational(value: RationalLike) -> str:
    """Render a rational as 'a/b' with positive denominator ('2/1' for integers)."""
    q = Fraction(value)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse 'a/b' or 'a'. Decimals, floats and zero denominators are rejected."""
    match = _RATIONAL_PATTERN.match(text or "")
    if match is None:
        raise ElementParseError(f"Malformed rational coefficient: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ElementParseError(f"Zero denominator in coefficient: {text!r}")
    return Fraction(numerator, denominator)


def multinomial(counts: Sequence[int]) -> int:
    """(sum counts)! / prod(counts_i!)"""
    result = factorial(sum(counts))
    for c in counts:
        result //= factorial(c)
    return result


def vandermonde_coefficients(nodes: Sequence[int], offset: int) -> CoefficientTable:
    """
    Invert the Vandermonde-type matrix M[k][t] = k^(offset+t).

    The returned table satisfies sum_k T[s][k] * k^(offset+t) == delta(s, t)
    exactly. Row s of T expresses the level-s component of a class through
    its pushforwards by the node multiplications.
    """
    nodes = list(nodes)
    if offset < 0:
        raise DomainError(f"Vandermonde offset must be non-negative, got {offset}")
    if not nodes:
        raise DomainError("Vandermonde node set is empty")
    if any(k == 0 for k in nodes):
        raise DomainError(f"Vandermonde nodes must be nonzero: {nodes}")
    if len(set(nodes)) != len(nodes):
        raise DomainError(f"Vandermonde nodes must be pairwise distinct: {nodes}")

    n = len(nodes)
    # Augmented [M | I], reduced to [I | M^-1] by Gauss-Jordan elimination.
    rows: List[List[Fraction]] = []
    for i, k in enumerate(nodes):
        row = [Fraction(k) ** (offset + t) for t in range(n)]
        row.extend(Fraction(1 if j == i else 0) for j in range(n))
        rows.append(row)

    for col in range(n):
        pivot = max(range(col, n), key=lambda r: abs(rows[r][col].numerator))
        if rows[pivot][col] == 0:
            raise DomainError(f"Singular Vandermonde matrix for nodes {nodes}")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]

    # rows[t][n + k] is (M^-1)[t][k]; T[s][k] = (M^-1)[s][k]
    return tuple(tuple(rows[s][n + k] for k in range(n)) for s in range(n))


def check_inverse(table: CoefficientTable, nodes: Sequence[int], offset: int) -> bool:
    """True when table * (k^(offset+t)) is the identity, exactly."""
    n = len(nodes)
    for s in range(n):
        for t in range(n):
            total = sum(
                (table[s][i] * Fraction(k) ** (offset + t) for i, k in enumerate(nodes)),
                Fraction(0),
            )
            if total != (1 if s == t else 0):
                return False
    return True
