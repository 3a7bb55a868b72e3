"""Block supermatrices over SuperPoly entries.

A SuperMatrix represents a morphism A^{p|q} -> A^{r|s}: rows are indexed
by the target (r even rows first, then s odd), columns by the source.  A
homogeneous matrix of parity pi has entry parities (row + column + pi)
mod 2.  For an even matrix that is the familiar block picture

    ( T1  T2 )      T1 (r x p), T4 (s x q) even entries,
    ( T3  T4 )      T2 (r x q), T3 (s x p) odd entries,

with the block parities reversed when pi is odd.

Inversion and the Berezinian require body determinants that are nonzero
constants: over a ring with even indeterminates the determinant alone
cannot certify a unit (t has no inverse in k[t]), and constant bodies
cover both Grassmann coefficients and matrices evaluated at points.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from . import linalg
from .errors import (
    ContextMismatch,
    NeitherBlockInvertible,
    NonConstantBody,
    NotInvertible,
    ParityError,
)
from .poly import Context, Parity, SuperPoly

Scalar = (int, Fraction)


class SuperDim(NamedTuple):
    even: int
    odd: int

    @property
    def total(self) -> int:
        return self.even + self.odd

    def __str__(self):
        return f"{self.even}|{self.odd}"


def pi_reverse(d: SuperDim) -> SuperDim:
    """Parity reversal: (Pi V)_0 = V_1, so p|q becomes q|p."""
    return SuperDim(d[1], d[0])


def _par(dim: SuperDim, k: int) -> int:
    return 0 if k < dim.even else 1


# -- grid helpers ---------------------------------------------------------
# Grids are tuples of tuples of SuperPoly, no block bookkeeping.  All the
# matrix algorithms below work on grids and wrap the result at the end.


def _gzero(ctx, nrows, ncols):
    z = SuperPoly.zero(ctx)
    return tuple((z,) * ncols for _ in range(nrows))


def _gid(ctx, n):
    one = SuperPoly.scalar(ctx, 1)
    zero = SuperPoly.zero(ctx)
    return tuple(
        tuple(one if i == j else zero for j in range(n)) for i in range(n)
    )


def _gadd(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _gsub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _gneg(a):
    return tuple(tuple(-x for x in row) for row in a)


def _gmul(ctx, a, b):
    inner = len(b)
    ncols = len(b[0]) if inner else 0
    out = []
    for row in a:
        acc = [SuperPoly.zero(ctx)] * ncols
        for k in range(inner):
            e = row[k]
            if e:
                brow = b[k]
                acc = [s + e * t for s, t in zip(acc, brow)]
        out.append(tuple(acc))
    return tuple(out)


def _gis_zero(a):
    return all(not e for row in a for e in row)


def _det(ctx, grid) -> SuperPoly:
    """Determinant of a square grid of even (hence commuting) entries.

    Division-free Laplace expansion down successive columns, memoised on
    the surviving row set so shared minors are computed once.  Exact over
    any commutative coefficient ring, nilpotents included, which rules
    out fraction-free elimination here: its exact divisions can hit zero
    divisors once even entries carry nilpotent parts.
    """
    n = len(grid)
    one = SuperPoly.scalar(ctx, 1)
    if n == 0:
        return one
    memo = {(): one}

    def minor(rows):
        got = memo.get(rows)
        if got is not None:
            return got
        col = n - len(rows)
        acc = SuperPoly.zero(ctx)
        neg = False
        for k, i in enumerate(rows):
            e = grid[i][col]
            if e:
                term = e * minor(rows[:k] + rows[k + 1 :])
                acc = acc - term if neg else acc + term
            neg = not neg
        memo[rows] = acc
        return acc

    return minor(tuple(range(n)))


def _adjugate(ctx, grid):
    n = len(grid)
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            sub = [row[:j] + row[j + 1 :] for k, row in enumerate(grid) if k != i]
            c = _det(ctx, sub)
            out[j][i] = -c if (i + j) & 1 else c
    return tuple(tuple(r) for r in out)


def _body_inverse(ctx, grid, label):
    """Split an even square grid as body + nilpotent and invert the body.

    Returns (body_grid, inverse_of_body_grid).  The body determinant must
    be a nonzero constant; the body entries themselves may be arbitrary
    even-variable polynomials (a unipotent block like [[1, t], [0, 1]] is
    fine).
    """
    body = tuple(tuple(e.body() for e in row) for row in grid)
    d = _det(ctx, body)
    if not d.is_constant():
        raise NotInvertible(f"body determinant of {label} is not constant")
    c = d.constant_term()
    if not c:
        raise NotInvertible(f"body determinant of {label} is zero")
    adj = _adjugate(ctx, body)
    inv = tuple(tuple(e / c for e in row) for row in adj)
    return body, inv


def _series_inverse(ctx, grid, body, binv):
    """Exact inverse of grid = body + N where every term of every entry of
    N carries at least one odd generator.  Then N' = body^{-1} N is
    nilpotent and (I + N')^{-1} is the finite alternating sum of its
    powers, so the loop below terminates within len(ctx.odd) steps."""
    n = len(grid)
    nprime = _gmul(ctx, binv, _gsub(grid, body))
    out = _gid(ctx, n)
    power = nprime
    neg = True
    while not _gis_zero(power):
        out = _gadd(out, _gneg(power) if neg else power)
        power = _gmul(ctx, power, nprime)
        neg = not neg
    return _gmul(ctx, out, binv)


def _grid_inverse(ctx, grid, label):
    body, binv = _body_inverse(ctx, grid, label)
    return _series_inverse(ctx, grid, body, binv)


def _scalar_inverse(u: SuperPoly) -> SuperPoly:
    """Inverse of an even scalar c(1 + n) with c a nonzero constant."""
    body = u.body()
    if not body.is_constant():
        raise NotInvertible("scalar body is not constant")
    c = body.constant_term()
    if not c:
        raise NotInvertible("scalar body is zero")
    n = u / c - 1
    out = SuperPoly.scalar(u.ctx, 1)
    power = n
    neg = True
    while power:
        out = out + (-power if neg else power)
        power = power * n
        neg = not neg
    return out / c


class SuperMatrix:
    """Homogeneous block matrix; immutable once built.

    Scalar multiplication is the left module action: c * T twists each
    entry by the row sign (-1)^{|c| * row parity}, the cost of carrying c
    past the target basis vector of that row.  This is the action with
    (c*S) @ T == c*(S@T) and S @ (c*T) == (-1)^{|c||S|} c*(S@T), and it
    is what makes square-zero parameters interact correctly with matrix
    products in the dual-number constructions downstream.
    """

    __slots__ = ("ctx", "source", "target", "parity", "rows")

    def __init__(self, ctx, source, target, rows, parity=Parity.EVEN):
        if parity not in (Parity.EVEN, Parity.ODD):
            raise ParityError("matrix parity must be even or odd")
        source = SuperDim(*source)
        target = SuperDim(*target)
        if len(rows) != target.total:
            raise ValueError(
                f"expected {target.total} rows for target {target}, got {len(rows)}"
            )
        grid = []
        for i, row in enumerate(rows):
            if len(row) != source.total:
                raise ValueError(
                    f"row {i}: expected {source.total} entries, got {len(row)}"
                )
            rp = _par(target, i)
            out = []
            for j, e in enumerate(row):
                if isinstance(e, Scalar):
                    e = SuperPoly.scalar(ctx, e)
                elif not isinstance(e, SuperPoly):
                    raise TypeError(f"entry ({i},{j}) is not a polynomial")
                elif e.ctx != ctx:
                    raise ContextMismatch(f"entry ({i},{j}) built over a different context")
                need = Parity((rp + _par(source, j) + parity.value) & 1)
                if not e.has_parity(need):
                    raise ParityError(
                        f"entry ({i},{j}) of a {parity} matrix must be {need}"
                    )
                out.append(e)
            grid.append(tuple(out))
        self.ctx = ctx
        self.source = source
        self.target = target
        self.parity = parity
        self.rows = tuple(grid)

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, ctx, dim) -> "SuperMatrix":
        dim = SuperDim(*dim)
        return cls._wrap(ctx, dim, dim, _gid(ctx, dim.total), Parity.EVEN)

    @classmethod
    def zeros(cls, ctx, source, target, parity=Parity.EVEN) -> "SuperMatrix":
        source = SuperDim(*source)
        target = SuperDim(*target)
        return cls._wrap(
            ctx, source, target, _gzero(ctx, target.total, source.total), parity
        )

    @classmethod
    def from_blocks(cls, ctx, t1, t2, t3, t4, parity=Parity.EVEN) -> "SuperMatrix":
        """Assemble from the four blocks; empty lists mark empty blocks."""
        r = len(t1) if t1 else len(t2)
        s = len(t4) if t4 else len(t3)
        p = len(t1[0]) if r and t1 else (len(t3[0]) if s and t3 else 0)
        q = len(t4[0]) if s and t4 else (len(t2[0]) if r and t2 else 0)
        rows = []
        for i in range(r):
            rows.append(list(t1[i] if t1 else []) + list(t2[i] if t2 else []))
        for i in range(s):
            rows.append(list(t3[i] if t3 else []) + list(t4[i] if t4 else []))
        return cls(ctx, SuperDim(p, q), SuperDim(r, s), rows, parity)

    @classmethod
    def _wrap(cls, ctx, source, target, grid, parity):
        # internal: grid already validated/normalised
        m = object.__new__(cls)
        m.ctx = ctx
        m.source = source
        m.target = target
        m.parity = parity
        m.rows = grid
        return m

    # -- queries -----------------------------------------------------------

    def entry(self, i, j) -> SuperPoly:
        return self.rows[i][j]

    def blocks(self):
        """The four blocks (T1, T2, T3, T4) as grids."""
        p = self.source.even
        r = self.target.even
        t1 = tuple(row[:p] for row in self.rows[:r])
        t2 = tuple(row[p:] for row in self.rows[:r])
        t3 = tuple(row[:p] for row in self.rows[r:])
        t4 = tuple(row[p:] for row in self.rows[r:])
        return t1, t2, t3, t4

    def is_zero(self) -> bool:
        return _gis_zero(self.rows)

    def is_square(self) -> bool:
        return self.source == self.target

    def __eq__(self, other):
        # the parity tag is not compared: distinct tags force some blocks
        # to vanish, so equal grids never disagree about acting parity
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        return (
            self.ctx == other.ctx
            and self.source == other.source
            and self.target == other.target
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ctx, self.source, self.target, self.rows))

    # -- arithmetic ----------------------------------------------------------

    def _compatible(self, other):
        if not isinstance(other, SuperMatrix):
            return None
        if other.ctx != self.ctx:
            raise ContextMismatch("matrices live in different contexts")
        return other

    def __add__(self, other):
        other = self._compatible(other)
        if other is None:
            return NotImplemented
        if (self.source, self.target) != (other.source, other.target):
            raise ValueError("matrix shapes differ")
        if self.parity is not other.parity:
            raise ParityError("cannot add matrices of different parity")
        return SuperMatrix._wrap(
            self.ctx, self.source, self.target,
            _gadd(self.rows, other.rows), self.parity,
        )

    def __sub__(self, other):
        other = self._compatible(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return SuperMatrix._wrap(
            self.ctx, self.source, self.target, _gneg(self.rows), self.parity
        )

    def __matmul__(self, other):
        other = self._compatible(other)
        if other is None:
            return NotImplemented
        if self.source != other.target:
            raise ValueError(
                f"cannot compose {self.target}<-{self.source} with "
                f"{other.target}<-{other.source}"
            )
        return SuperMatrix._wrap(
            self.ctx, other.source, self.target,
            _gmul(self.ctx, self.rows, other.rows),
            self.parity + other.parity,
        )

    def __rmul__(self, scalar):
        if isinstance(scalar, Scalar):
            scalar = SuperPoly.scalar(self.ctx, scalar)
        if not isinstance(scalar, SuperPoly):
            return NotImplemented
        if scalar.ctx != self.ctx:
            raise ContextMismatch("scalar built over a different context")
        sp = scalar.parity()
        if sp is Parity.MIXED:
            raise ParityError("scalar multiplier must be homogeneous")
        grid = []
        for i, row in enumerate(self.rows):
            flip = sp is Parity.ODD and _par(self.target, i)
            grid.append(tuple(-(scalar * e) if flip else scalar * e for e in row))
        return SuperMatrix._wrap(
            self.ctx, self.source, self.target, tuple(grid), self.parity + sp
        )

    def __mul__(self, scalar):
        # both spellings mean the left action
        return self.__rmul__(scalar)

    # -- operations ----------------------------------------------------------

    def supertrace(self) -> SuperPoly:
        """tr(T1) - tr(T4) for even matrices, tr(S1) + tr(S4) for odd."""
        if not self.is_square():
            raise ValueError("supertrace needs a square matrix")
        p = self.source.even
        n = self.source.total
        top = SuperPoly.zero(self.ctx)
        for i in range(p):
            top = top + self.rows[i][i]
        bot = SuperPoly.zero(self.ctx)
        for i in range(p, n):
            bot = bot + self.rows[i][i]
        return top + bot if self.parity is Parity.ODD else top - bot

    def supertranspose(self) -> "SuperMatrix":
        """Block transpose with signs chosen so products reverse with the
        Koszul sign: (S @ T)^st == (-1)^{|S||T|} (T^st @ S^st).

        Even matrices map T2 to -T2^t, odd matrices map T3 to -T3^t.
        """
        p, q = self.source
        r, s = self.target
        grid = []
        for i in range(p + q):
            row = []
            for j in range(r + s):
                e = self.rows[j][i]
                if self.parity is Parity.EVEN:
                    if j < r and i >= p:
                        e = -e
                else:
                    if j >= r and i < p:
                        e = -e
                row.append(e)
            grid.append(tuple(row))
        return SuperMatrix._wrap(
            self.ctx, self.target, self.source, tuple(grid), self.parity
        )

    def invert(self) -> "SuperMatrix":
        """Exact two-sided inverse of an even square matrix.

        T = B(I + N') with B the block-diagonal body matrix; both body
        block determinants must be nonzero constants, B inverts over the
        rationals, and the finite Neumann series handles the nilpotent
        remainder.
        """
        if self.parity is not Parity.EVEN:
            raise ParityError("only even matrices are inverted")
        if not self.is_square():
            raise ValueError("cannot invert a non-square matrix")
        ctx = self.ctx
        p, q = self.source
        t1, _, _, t4 = self.blocks()
        b1, i1 = _body_inverse(ctx, t1, "T1")
        b4, i4 = _body_inverse(ctx, t4, "T4")
        zero = SuperPoly.zero(ctx)
        n = p + q
        body = tuple(
            tuple(
                b1[i][j] if i < p and j < p
                else b4[i - p][j - p] if i >= p and j >= p
                else zero
                for j in range(n)
            )
            for i in range(n)
        )
        binv = tuple(
            tuple(
                i1[i][j] if i < p and j < p
                else i4[i - p][j - p] if i >= p and j >= p
                else zero
                for j in range(n)
            )
            for i in range(n)
        )
        grid = _series_inverse(ctx, self.rows, body, binv)
        return SuperMatrix._wrap(ctx, self.source, self.target, grid, Parity.EVEN)

    def berezinian(self, formula=None) -> SuperPoly:
        """det(T1 - T2 T4^{-1} T3) det(T4)^{-1}, the super determinant.

        formula picks "primary" (needs T4 invertible) or "alternate"
        (needs T1 invertible, computes det(T1) det(T4 - T3 T1^{-1} T2)^{-1});
        with formula=None the primary form is tried first.  The two agree
        whenever both blocks invert.
        """
        if self.parity is not Parity.EVEN:
            raise ParityError("the Berezinian is defined for even matrices")
        if not self.is_square():
            raise ValueError("the Berezinian needs a square matrix")
        if formula not in (None, "primary", "alternate"):
            raise ValueError(f"unknown formula {formula!r}")
        ctx = self.ctx
        t1, t2, t3, t4 = self.blocks()
        # with an empty block row the two formulas coincide and the
        # Schur-complement plumbing would lose the grid width
        if self.source.odd == 0:
            return _det(ctx, t1)
        if self.source.even == 0:
            return _scalar_inverse(_det(ctx, t4))

        def primary():
            t4inv = _grid_inverse(ctx, t4, "T4")
            y1 = _gsub(t1, _gmul(ctx, _gmul(ctx, t2, t4inv), t3))
            return _det(ctx, y1) * _scalar_inverse(_det(ctx, t4))

        def alternate():
            t1inv = _grid_inverse(ctx, t1, "T1")
            y2 = _gsub(t4, _gmul(ctx, _gmul(ctx, t3, t1inv), t2))
            return _det(ctx, t1) * _scalar_inverse(_det(ctx, y2))

        if formula == "primary":
            return primary()
        if formula == "alternate":
            return alternate()
        try:
            return primary()
        except NotInvertible:
            pass
        try:
            return alternate()
        except NotInvertible:
            raise NeitherBlockInvertible(
                "neither T1 nor T4 has an invertible body"
            ) from None

    def elementary_decomposition(self):
        """Factor T = T_plus @ T_zero @ T_minus with X = T2 T4^{-1},
        Y1 = T1 - T2 T4^{-1} T3, Y2 = T4, Z = T4^{-1} T3."""
        if self.parity is not Parity.EVEN:
            raise ParityError("decomposition is defined for even matrices")
        if not self.is_square():
            raise ValueError("decomposition needs a square matrix")
        ctx = self.ctx
        p, q = self.source
        t1, t2, t3, t4 = self.blocks()
        t4inv = _grid_inverse(ctx, t4, "T4")
        x = _gmul(ctx, t2, t4inv)
        y1 = _gsub(t1, _gmul(ctx, x, t3))
        z = _gmul(ctx, t4inv, t3)
        zero = SuperPoly.zero(ctx)
        one = SuperPoly.scalar(ctx, 1)
        n = p + q

        def assemble(top_left, top_right, bot_left, bot_right):
            grid = tuple(
                tuple(
                    (top_left[i][j] if j < p else top_right[i][j - p])
                    if i < p
                    else (bot_left[i - p][j] if j < p else bot_right[i - p][j - p])
                    for j in range(n)
                )
                for i in range(n)
            )
            return SuperMatrix._wrap(ctx, self.source, self.target, grid, Parity.EVEN)

        eye_p = _gid(ctx, p)
        eye_q = _gid(ctx, q)
        zero_pq = _gzero(ctx, p, q)
        zero_qp = _gzero(ctx, q, p)
        t_plus = assemble(eye_p, x, zero_qp, eye_q)
        t_zero = assemble(y1, zero_pq, zero_qp, t4)
        t_minus = assemble(eye_p, zero_pq, z, eye_q)
        return t_plus, t_zero, t_minus

    def srank(self) -> SuperDim:
        """rank(body T1) | rank(body T4); entries must have constant bodies."""
        if self.parity is not Parity.EVEN:
            raise ParityError("srank is defined for even matrices")
        t1, _, _, t4 = self.blocks()

        def body_rows(grid, label):
            rows = []
            for row in grid:
                out = []
                for e in row:
                    b = e.body()
                    if not b.is_constant():
                        raise NonConstantBody(
                            f"{label} entry has non-constant body {b}"
                        )
                    out.append(b.constant_term())
                rows.append(out)
            return rows

        return SuperDim(
            linalg.rank(body_rows(t1, "T1")), linalg.rank(body_rows(t4, "T4"))
        )

    # -- rendering -----------------------------------------------------------

    def __str__(self):
        head = f"dims {self.source} -> {self.target}"
        if self.parity is Parity.ODD:
            head += " parity odd"
        lines = [head]
        for row in self.rows:
            lines.append("[" + ", ".join(str(e) for e in row) + "]")
        return "\n".join(lines)

    def __repr__(self):
        return f"SuperMatrix({self.source} -> {self.target}, {self.parity})"


def superbracket(a: SuperMatrix, b: SuperMatrix) -> SuperMatrix:
    """Matrix superbracket [a, b] = ab - (-1)^{|a||b|} ba."""
    ab = a @ b
    ba = b @ a
    if a.parity is Parity.ODD and b.parity is Parity.ODD:
        return ab + ba
    return ab - ba
