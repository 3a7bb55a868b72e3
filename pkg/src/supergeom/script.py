"""Line-oriented session scripts.

A script is a sequence of statements, one per logical line; a line
continues onto the next while its brackets are unbalanced, and '#'
starts a comment.  Binding statements (context, let, matrix, morphism,
field, group, variety) populate a single namespace; command statements
(eval, ber, strace, srank, inv, pullback, jacobian, classify, tangent,
livf, bracket, lie, involutive, axioms, export) append their canonical
rendering to the report.  Expressions are evaluated over the most
recently declared context; morphisms and groups refer to contexts by
name.

Output is plain ASCII and depends only on the script text, never on
hashing or platform, so identical scripts give byte-identical reports.
Failures are collected as "error: line N: ..." messages; execution
stops at the first one unless keep_going is set.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import NamedTuple

from . import expr
from .derivation import SuperDerivation, TangentVector, bracket
from .distribution import involutive
from .errors import KernelError, ScriptError
from .groups import (
    GroupLaw,
    check_group_axioms,
    left_invariant_field,
    product_context,
)
from .liealg import MatrixGroupSpec, lie_algebra
from .matrix import SuperDim, SuperMatrix
from .morphism import Morphism
from .poly import Context, Parity, RationalPoint
from .serialize import to_json
from .variety import PointedVariety, tangent_space

_NAME = r"[A-Za-z_][A-Za-z0-9_]*"


class ScriptResult(NamedTuple):
    output: str
    errors: tuple
    exports: dict

    @property
    def ok(self) -> bool:
        return not self.errors


def _logical_lines(text: str):
    """Yield (line_number, statement) with comments stripped and
    bracket-continued lines joined."""
    buf = []
    start = None
    depth = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip() and depth == 0:
            continue
        if start is None:
            start = lineno
        buf.append(line)
        depth += sum(line.count(c) for c in "([") - sum(
            line.count(c) for c in ")]"
        )
        if depth <= 0:
            yield start, " ".join(part.strip() for part in buf)
            buf = []
            start = None
            depth = 0
    if buf:
        yield start, " ".join(part.strip() for part in buf)


def _split_top(text: str, sep: str):
    """Split at top-level separators, ignoring ones inside () or []."""
    parts = []
    depth = 0
    cur = []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur).strip())
    return parts


def _fraction(text: str, line):
    try:
        return Fraction(text.replace(" ", ""))
    except (ValueError, ZeroDivisionError):
        raise ScriptError(f"bad rational {text.strip()!r}", line=line) from None


class Interpreter:
    def __init__(self):
        self.contexts = {}
        self.values = {}
        self.active = None
        self.last_group = None
        self.report = []
        self.exports = {}

    # -- lookups -------------------------------------------------------------

    def _ctx(self, line) -> Context:
        if self.active is None:
            raise ScriptError("no context declared yet", line=line)
        return self.active

    def _named_ctx(self, name, line) -> Context:
        try:
            return self.contexts[name]
        except KeyError:
            raise ScriptError(f"unknown context {name!r}", line=line) from None

    def _env(self):
        """let-bound polynomials, resolvable inside later expressions."""
        return {k: v for k, (kind, v) in self.values.items() if kind == "poly"}

    def _value(self, name, want, line):
        kind_value = self.values.get(name)
        if kind_value is None:
            raise ScriptError(f"name {name!r} is not bound", line=line)
        kind, value = kind_value
        if kind != want:
            raise ScriptError(
                f"{name!r} is a {kind}, expected a {want}", line=line
            )
        return value

    def _point(self, text, ctx, line) -> RationalPoint:
        values = [] if not text.strip() else [
            _fraction(v, line) for v in _split_top(text, ",")
        ]
        m, n = ctx.dims
        if len(values) == m + n:
            if any(values[m:]):
                raise ScriptError(
                    "odd coordinates of a point must be zero", line=line
                )
            values = values[:m]
        elif len(values) != m:
            raise ScriptError(
                f"expected {m} or {m + n} coordinates, got {len(values)}",
                line=line,
            )
        return RationalPoint(ctx, values)

    def _names_list(self, text, line):
        if not text.strip():
            return []
        names = [n.strip() for n in _split_top(text, ",")]
        for n in names:
            if not re.fullmatch(_NAME, n):
                raise ScriptError(f"bad generator name {n!r}", line=line)
        return names

    # -- statements ------------------------------------------------------------

    def _match(self, pattern, text, line, usage):
        m = re.fullmatch(pattern, text)
        if not m:
            raise ScriptError(f"expected: {usage}", line=line)
        return m

    def stmt_context(self, rest, line):
        m = self._match(
            rf"(?:(?P<name>{_NAME})\s+)?even\s*=\s*\[(?P<even>[^\]]*)\]"
            rf"\s+odd\s*=\s*\[(?P<odd>[^\]]*)\]",
            rest, line, "context [NAME] even=[...] odd=[...]",
        )
        try:
            ctx = Context(
                even=self._names_list(m.group("even"), line),
                odd=self._names_list(m.group("odd"), line),
            )
        except ValueError as e:
            raise ScriptError(str(e), line=line) from None
        self.active = ctx
        if m.group("name"):
            self.contexts[m.group("name")] = ctx

    def stmt_let(self, rest, line):
        m = self._match(rf"(?P<name>{_NAME})\s*=\s*(?P<expr>.+)", rest, line,
                        "let NAME = EXPR")
        poly = expr.parse_poly(m.group("expr"), self._ctx(line), line, self._env())
        self.values[m.group("name")] = ("poly", poly)

    def stmt_matrix(self, rest, line):
        m = self._match(
            rf"(?P<name>{_NAME})\s+dims\s+(?P<p>\d+)\|(?P<q>\d+)\s*->\s*"
            rf"(?P<r>\d+)\|(?P<s>\d+)(?P<odd>\s+odd)?\s+rows\s*"
            rf"\[(?P<rows>.*)\]",
            rest, line, "matrix NAME dims p|q -> r|s [odd] rows [a, b; c, d]",
        )
        ctx = self._ctx(line)
        source = SuperDim(int(m.group("p")), int(m.group("q")))
        target = SuperDim(int(m.group("r")), int(m.group("s")))
        parity = Parity.ODD if m.group("odd") else Parity.EVEN
        rows = [
            [expr.parse_poly(e, ctx, line, self._env())
             for e in _split_top(row, ",")]
            for row in _split_top(m.group("rows"), ";")
        ]
        self.values[m.group("name")] = (
            "matrix", SuperMatrix(ctx, source, target, rows, parity)
        )

    def stmt_morphism(self, rest, line):
        m = self._match(
            rf"(?P<name>{_NAME})\s*:\s*(?P<src>{_NAME})\s*->\s*"
            rf"(?P<dst>{_NAME})\s*\[(?P<images>.*)\]",
            rest, line, "morphism NAME : SRC -> DST [expr, ...]",
        )
        src = self._named_ctx(m.group("src"), line)
        dst = self._named_ctx(m.group("dst"), line)
        images = [
            expr.parse_poly(e, src, line, self._env())
            for e in _split_top(m.group("images"), ",")
        ]
        self.values[m.group("name")] = ("morphism", Morphism(src, dst, images))

    def stmt_field(self, rest, line):
        m = self._match(rf"(?P<name>{_NAME})\s*=\s*\[(?P<coeffs>.*)\]",
                        rest, line, "field NAME = [coeff, ...]")
        ctx = self._ctx(line)
        coeffs = [
            expr.parse_poly(e, ctx, line, self._env())
            for e in _split_top(m.group("coeffs"), ",")
        ]
        em, on = ctx.dims
        if len(coeffs) != em + on:
            raise ScriptError(
                f"expected {em + on} coefficients, got {len(coeffs)}",
                line=line,
            )
        parity = None
        for k, c in enumerate(coeffs):
            if not c:
                continue
            cp = c.parity()
            if cp is Parity.MIXED:
                raise ScriptError(
                    f"coefficient {k + 1} is not parity homogeneous", line=line
                )
            fp = cp if k < em else cp.flipped()
            if parity is None:
                parity = fp
            elif parity is not fp:
                raise ScriptError(
                    "coefficients do not give the field one parity", line=line
                )
        parity = parity or Parity.EVEN
        self.values[m.group("name")] = (
            "field", SuperDerivation(ctx, parity, coeffs[:em], coeffs[em:])
        )

    def stmt_group(self, rest, line):
        m = self._match(
            rf"(?P<name>{_NAME})\s+context\s*=\s*(?P<ctx>{_NAME})\s+"
            rf"mu\s*=\s*\[(?P<mu>.*?)\]\s+unit\s*=\s*\((?P<unit>.*?)\)"
            rf"(?:\s+inv\s*=\s*\[(?P<inv>.*)\])?",
            rest, line,
            "group NAME context=CTX mu=[...] unit=(...) [inv=[...]]",
        )
        coords = self._named_ctx(m.group("ctx"), line)
        double = product_context(coords)
        mu = Morphism(double, coords, [
            expr.parse_poly(e, double, line, self._env())
            for e in _split_top(m.group("mu"), ",")
        ])
        unit = self._point(m.group("unit"), coords, line)
        inverse = None
        if m.group("inv") is not None:
            inverse = Morphism(coords, coords, [
                expr.parse_poly(e, coords, line, self._env())
                for e in _split_top(m.group("inv"), ",")
            ])
        law = GroupLaw(coords, mu, unit, inverse)
        self.values[m.group("name")] = ("group", law)
        self.last_group = law

    def stmt_variety(self, rest, line):
        m = self._match(
            rf"(?P<name>{_NAME})\s+ideal\s*=\s*\[(?P<ideal>.*?)\]\s+"
            rf"point\s*=\s*\((?P<point>.*?)\)",
            rest, line, "variety NAME ideal=[...] point=(...)",
        )
        ctx = self._ctx(line)
        gens = [
            expr.parse_poly(e, ctx, line, self._env())
            for e in _split_top(m.group("ideal"), ",")
        ]
        point = self._point(m.group("point"), ctx, line)
        self.values[m.group("name")] = (
            "variety", PointedVariety(ctx, gens, point)
        )

    # -- commands ----------------------------------------------------------------

    def cmd_eval(self, rest, line):
        ctx = self._ctx(line)
        self.report.append(str(expr.parse_poly(rest, ctx, line, self._env())))

    def _matrix_arg(self, rest, line) -> SuperMatrix:
        m = self._match(rf"(?P<name>{_NAME})", rest, line, "COMMAND MATRIXNAME")
        return self._value(m.group("name"), "matrix", line)

    def cmd_ber(self, rest, line):
        self.report.append(str(self._matrix_arg(rest, line).berezinian()))

    def cmd_strace(self, rest, line):
        self.report.append(str(self._matrix_arg(rest, line).supertrace()))

    def cmd_srank(self, rest, line):
        self.report.append(str(self._matrix_arg(rest, line).srank()))

    def cmd_inv(self, rest, line):
        self.report.append(str(self._matrix_arg(rest, line).invert()))

    def cmd_pullback(self, rest, line):
        m = self._match(rf"(?P<name>{_NAME})\s+(?P<expr>.+)", rest, line,
                        "pullback MORPHISM EXPR")
        phi = self._value(m.group("name"), "morphism", line)
        f = expr.parse_poly(m.group("expr"), phi.target, line, self._env())
        self.report.append(str(phi.pullback(f)))

    def _morphism_point(self, rest, line, usage):
        m = self._match(rf"(?P<name>{_NAME})\s*\((?P<point>.*?)\)",
                        rest, line, usage)
        phi = self._value(m.group("name"), "morphism", line)
        return phi, self._point(m.group("point"), phi.source, line)

    def cmd_jacobian(self, rest, line):
        phi, at = self._morphism_point(rest, line, "jacobian MORPHISM (point)")
        self.report.append(str(phi.differential_at(at)))

    def cmd_classify(self, rest, line):
        phi, at = self._morphism_point(rest, line, "classify MORPHISM (point)")
        kind = phi.classify_at(at)
        self.report.append("none" if kind is None else str(kind))

    def cmd_tangent(self, rest, line):
        m = self._match(rf"(?P<name>{_NAME})", rest, line, "tangent VARIETY")
        result = tangent_space(self._value(m.group("name"), "variety", line))
        for rel in result.relations:
            self.report.append(f"{rel} = 0")
        self.report.append(f"dim {result.dimension}")

    def cmd_livf(self, rest, line):
        m = self._match(rf"d/d(?P<coord>{_NAME})(?:\s+(?P<group>{_NAME}))?",
                        rest, line, "livf d/dCOORD [GROUP]")
        if m.group("group"):
            law = self._value(m.group("group"), "group", line)
        elif self.last_group is not None:
            law = self.last_group
        else:
            raise ScriptError("no group declared yet", line=line)
        name = m.group("coord")
        if name not in law.coords:
            raise ScriptError(
                f"unknown generator {name!r} in the group context", line=line
            )
        v = TangentVector.coordinate(law.coords, name)
        self.report.append(str(left_invariant_field(law, v)))

    def cmd_bracket(self, rest, line):
        m = self._match(rf"(?P<a>{_NAME})\s+(?P<b>{_NAME})", rest, line,
                        "bracket FIELD FIELD")
        a = self._value(m.group("a"), "field", line)
        b = self._value(m.group("b"), "field", line)
        self.report.append(str(bracket(a, b)))

    def cmd_lie(self, rest, line):
        m = self._match(r"(?P<kind>GL|SL|OSp)\s+(?P<m>\d+)\|(?P<n>\d+)",
                        rest, line, "lie GL|SL|OSp m|n")
        try:
            spec = MatrixGroupSpec(
                m.group("kind"), (int(m.group("m")), int(m.group("n")))
            )
        except ValueError as e:
            raise ScriptError(str(e), line=line) from None
        result = lie_algebra(spec)
        if not result.constraints:
            self.report.append("no constraints")
        for c in result.constraints:
            self.report.append(f"{c} = 0")

    def cmd_involutive(self, rest, line):
        names = rest.split()
        if not names:
            raise ScriptError("expected: involutive FIELD [FIELD ...]",
                              line=line)
        fields = [self._value(n, "field", line) for n in names]
        self.report.append(str(involutive(fields)))

    def cmd_axioms(self, rest, line):
        m = self._match(rf"(?P<name>{_NAME})", rest, line, "axioms GROUP")
        law = self._value(m.group("name"), "group", line)
        for result in check_group_axioms(law):
            self.report.append(str(result))

    def cmd_export(self, rest, line):
        m = self._match(rf"(?P<name>{_NAME})", rest, line, "export NAME")
        name = m.group("name")
        if name in self.values:
            value = self.values[name][1]
        elif name in self.contexts:
            value = self.contexts[name]
        else:
            raise ScriptError(f"name {name!r} is not bound", line=line)
        data = to_json(value)
        self.exports[name] = data
        self.report.append(json.dumps(data, separators=(",", ":")))

    # -- driver ---------------------------------------------------------------

    STATEMENTS = {
        "context": stmt_context,
        "let": stmt_let,
        "matrix": stmt_matrix,
        "morphism": stmt_morphism,
        "field": stmt_field,
        "group": stmt_group,
        "variety": stmt_variety,
        "eval": cmd_eval,
        "ber": cmd_ber,
        "strace": cmd_strace,
        "srank": cmd_srank,
        "inv": cmd_inv,
        "pullback": cmd_pullback,
        "jacobian": cmd_jacobian,
        "classify": cmd_classify,
        "tangent": cmd_tangent,
        "livf": cmd_livf,
        "bracket": cmd_bracket,
        "lie": cmd_lie,
        "involutive": cmd_involutive,
        "axioms": cmd_axioms,
        "export": cmd_export,
    }

    def execute(self, lineno, statement):
        head, _, rest = statement.partition(" ")
        handler = self.STATEMENTS.get(head)
        if handler is None:
            raise ScriptError(f"unknown statement {head!r}", line=lineno)
        handler(self, rest.strip(), lineno)


def run_script(text: str, keep_going: bool = False) -> ScriptResult:
    """Execute a script and collect its report, errors, and exports."""
    interp = Interpreter()
    errors = []
    for lineno, statement in _logical_lines(text):
        try:
            interp.execute(lineno, statement)
        except ScriptError as e:
            if e.line is not None:
                errors.append(f"error: {e}")
            else:
                errors.append(f"error: line {lineno}: {e}")
        except (KernelError, ValueError, ZeroDivisionError) as e:
            errors.append(f"error: line {lineno}: {e}")
        if errors and not keep_going:
            break
    output = "\n".join(interp.report)
    if output:
        output += "\n"
    return ScriptResult(output, tuple(errors), interp.exports)
