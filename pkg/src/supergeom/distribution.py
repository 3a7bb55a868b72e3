"""Involutivity of distributions spanned by homogeneous vector fields.

The verdict is three-valued on purpose.  Membership of a bracket in the
module span is decidable here only after normalising the coefficient
matrix: when some square submatrix with constant-body entries is
invertible, left-multiplying by its inverse rewrites the spanning set so
that the chosen columns carry the identity.  Any candidate combination
is then forced by reading the bracket's coefficients off those columns,
and the leftover either vanishes (bracket is in the span) or is provably
outside.  Without such a pivot structure the question needs module
machinery over the full polynomial ring, so we refuse to guess.
"""

from __future__ import annotations

import enum
from itertools import combinations

from . import linalg
from .derivation import SuperDerivation, bracket
from .errors import ContextMismatch
from .matrix import _grid_inverse, _gmul
from .poly import SuperPoly


class Involutivity(enum.Enum):
    INTEGRABLE = "Integrable"
    NOT_INTEGRABLE = "NotIntegrable"
    INDETERMINATE = "Indeterminate"

    def __str__(self):
        return self.value


class Distribution:
    """Nonempty list of homogeneous vector fields over one context."""

    __slots__ = ("ctx", "fields")

    def __init__(self, fields):
        fields = tuple(fields)
        if not fields:
            raise ValueError("a distribution needs at least one field")
        ctx = fields[0].ctx
        for f in fields:
            if not isinstance(f, SuperDerivation):
                raise TypeError("distribution fields must be derivations")
            if f.ctx != ctx:
                raise ContextMismatch("fields live in different contexts")
        self.ctx = ctx
        self.fields = fields


def involutive(dist) -> Involutivity:
    """Is the span closed under the super bracket?

    INTEGRABLE when every pairwise bracket (self-brackets included; they
    matter for odd fields) lies in the span, NOT_INTEGRABLE when some
    bracket provably does not, INDETERMINATE when no invertible pivot
    submatrix exists to decide membership.
    """
    if not isinstance(dist, Distribution):
        dist = Distribution(dist)
    fields = dist.fields
    ctx = dist.ctx

    pairs = [
        bracket(fields[i], fields[j])
        for i in range(len(fields))
        for j in range(i, len(fields))
    ]
    if all(w.is_zero() for w in pairs):
        return Involutivity.INTEGRABLE

    k = len(fields)
    grid = tuple(tuple(f.coefficients()) for f in fields)
    ncols = len(ctx.even) + len(ctx.odd)

    chosen = None
    for cols in combinations(range(ncols), k):
        sub = [[grid[a][c] for c in cols] for a in range(k)]
        if not all(e.body().is_constant() for row in sub for e in row):
            continue
        body = [[e.body().constant_term() for e in row] for row in sub]
        if linalg.rank(body) == k:
            chosen = cols
            break
    if chosen is None:
        return Involutivity.INDETERMINATE

    t0 = tuple(tuple(grid[a][c] for c in chosen) for a in range(k))
    normalized = _gmul(ctx, _grid_inverse(ctx, t0, "pivot submatrix"), grid)

    for w in pairs:
        coeffs = w.coefficients()
        residual = list(coeffs)
        for row, c in enumerate(chosen):
            lam = coeffs[c]
            if lam:
                residual = [
                    r - lam * t for r, t in zip(residual, normalized[row])
                ]
        if any(residual):
            return Involutivity.NOT_INTEGRABLE
    return Involutivity.INTEGRABLE
