"""Exact rational feasibility of linear inequality systems by Fourier–Motzkin elimination."""

import logging
from collections.abc import Sequence
from fractions import Fraction

logger = logging.getLogger(__name__)

_Row = tuple[tuple[Fraction, ...], Fraction]


def _normalize(coefficients: Sequence[Fraction], bound: Fraction) -> _Row:
    """Scale a row so its first nonzero coefficient has absolute value 1."""
    for value in coefficients:
        if value:
            scale = abs(value)
            return tuple(c / scale for c in coefficients), bound / scale
    return tuple(coefficients), bound


def solve_inequalities(
    rows: Sequence[Sequence[Fraction | int]],
    rhs: Sequence[Fraction | int],
    dimension: int,
) -> tuple[Fraction, ...] | None:
    """
    Find a rational solution of ``rows · v <= rhs``.

    Variables are eliminated last to first; a solution is then recovered by
    back-substitution, picking 0 where allowed and otherwise the bound closest
    to 0.

    Args:
        rows: Coefficient rows, each of length ``dimension``
        rhs: Right-hand sides
        dimension: Number of variables

    Returns:
        A solution vector, or None if the system is infeasible
    """
    system: dict[tuple[Fraction, ...], Fraction] = {}
    for row, bound in zip(rows, rhs):
        key, value = _normalize([Fraction(c) for c in row], Fraction(bound))
        if not any(key):
            if value < 0:
                return None
            continue
        system[key] = min(value, system.get(key, value))

    history: list[tuple[int, list[_Row], list[_Row]]] = []
    current = list(system.items())
    for variable in reversed(range(dimension)):
        upper = [row for row in current if row[0][variable] > 0]
        lower = [row for row in current if row[0][variable] < 0]
        reduced: dict[tuple[Fraction, ...], Fraction] = {}
        for coefficients, bound in current:
            if not coefficients[variable]:
                reduced[coefficients] = min(bound, reduced.get(coefficients, bound))
        for up_coefficients, up_bound in upper:
            for low_coefficients, low_bound in lower:
                a, b = up_coefficients[variable], -low_coefficients[variable]
                combined = [b * u + a * w for u, w in zip(up_coefficients, low_coefficients)]
                key, value = _normalize(combined, b * up_bound + a * low_bound)
                if not any(key):
                    if value < 0:
                        return None
                    continue
                reduced[key] = min(value, reduced.get(key, value))
        history.append((variable, upper, lower))
        current = list(reduced.items())
        logger.debug("eliminated v%d, %d rows remain", variable, len(current))

    solution = [Fraction(0)] * dimension
    for variable, upper, lower in reversed(history):
        high: Fraction | None = None
        low: Fraction | None = None
        for coefficients, bound in upper:
            rest = sum(
                (c * solution[i] for i, c in enumerate(coefficients) if i != variable), Fraction(0)
            )
            value = (bound - rest) / coefficients[variable]
            high = value if high is None else min(high, value)
        for coefficients, bound in lower:
            rest = sum(
                (c * solution[i] for i, c in enumerate(coefficients) if i != variable), Fraction(0)
            )
            value = (bound - rest) / coefficients[variable]
            low = value if low is None else max(low, value)
        if low is not None and low > 0:
            solution[variable] = low
        elif high is not None and high < 0:
            solution[variable] = high
        else:
            solution[variable] = Fraction(0)
    return tuple(solution)


def nonzero_solution(
    rows: Sequence[Sequence[Fraction | int]], dimension: int
) -> tuple[Fraction, ...] | None:
    """
    Find a nonzero ``u`` with ``⟨u, y⟩ <= 0`` for every row ``y``.

    The homogeneous system is dehomogenized by fixing one coordinate to ±1,
    giving at most ``2 * dimension`` feasibility problems.

    Args:
        rows: Integer or rational rows ``y``
        dimension: Length of ``u``

    Returns:
        A nonzero rational solution, or None if only ``u = 0`` satisfies the system
    """
    for fixed in range(dimension):
        for sign in (1, -1):
            reduced_rows = [
                [Fraction(c) for i, c in enumerate(row) if i != fixed] for row in rows
            ]
            rhs = [-sign * Fraction(row[fixed]) for row in rows]
            partial = solve_inequalities(reduced_rows, rhs, dimension - 1)
            if partial is not None:
                values = list(partial)
                values.insert(fixed, Fraction(sign))
                return tuple(values)
    return None
