"""Operator verification, equation extraction, and desk-scale grid solving.

Operator notions and their defining identities (all over basis pairs,
exact symbolic residuals):

  averaging_assoc                 mu(Ha,Hb) = H mu(a,Hb) = H mu(Ha,b)
                                  (twist commutation only under strict_twist:
                                  the source definition omits it for this kind)
  rota_baxter                     R o alpha = alpha o R, and per operation
                                  R(x) op R(y) = R(R(x) op y + x op R(y))
  relative_averaging              Tu prec Tv = T(Tu prec_l v) = T(u prec_r Tv),
                                  same for succ, plus T o beta = alpha o T
  homomorphic_relative_averaging  relative averaging + dendriform homomorphism
  averaging_quadri                per-operation averaging identities plus
                                  twist commutation (the source leaves this
                                  notion undefined; this is the documented
                                  interpretation)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .axioms import check_homomorphism
from .model import (
    ActionBundle,
    AlgebraBundle,
    LinearMap,
    RepresentationBundle,
    basis_vector,
    vec_add,
    vec_sub,
)
from .poly import Polynomial
from .report import Report, Violation

TWIST_BOUND_KINDS = {
    "rota_baxter",
    "relative_averaging",
    "homomorphic_relative_averaging",
    "averaging_quadri",
}


@dataclass(frozen=True)
class OperatorSpec:
    """An operator matrix tagged with its kind and (optionally) the bundle
    it acts on; with a context attached the matrix shape is validated."""

    kind: str
    matrix: LinearMap
    context: object = None

    def __post_init__(self):
        if self.context is not None:
            rows, cols = _operator_shape(self.context, self.kind)
            if (self.matrix.dim_out, self.matrix.dim_in) != (rows, cols):
                raise ValueError(
                    f"{self.kind} operator must be {rows} x {cols}, "
                    f"got {self.matrix.dim_out} x {self.matrix.dim_in}"
                )

    def verify(self, strict_twist: bool = False) -> Report:
        if self.context is None:
            raise ValueError("no context attached to this operator")
        return verify_operator(
            self.kind, self.context, self.matrix, strict_twist=strict_twist
        )


def _residuals(template: str, witness, lhs, rhs, entries) -> None:
    for coord, (a, b) in enumerate(zip(lhs, rhs), start=1):
        residual = a - b
        if residual:
            entries.append(Violation(template, witness + (coord,), residual))


def _twist_commutation(
    template: str, left: LinearMap, right: LinearMap, entries
) -> None:
    for r in range(left.dim_out):
        for c in range(left.dim_in):
            residual = left.entries[r][c] - right.entries[r][c]
            if residual:
                entries.append(Violation(template, (r + 1, c + 1), residual))


def verify_averaging_assoc(
    algebra: AlgebraBundle, avg: LinearMap, strict_twist: bool = False
) -> Report:
    if algebra.kind != "associative":
        raise ValueError(f"expected an associative bundle, got {algebra.kind!r}")
    if (avg.dim_out, avg.dim_in) != (algebra.dim, algebra.dim):
        raise ValueError("operator matrix shape does not match the algebra")
    mu = algebra.op("mu")
    dim = algebra.dim
    entries: list = []
    for i in range(1, dim + 1):
        ei = basis_vector(dim, i)
        hi = avg.apply(ei)
        for j in range(1, dim + 1):
            ej = basis_vector(dim, j)
            hj = avg.apply(ej)
            lhs = mu.apply(hi, hj)
            _residuals("avg.mu.a", (i, j), lhs, avg.apply(mu.apply(ei, hj)), entries)
            _residuals("avg.mu.b", (i, j), lhs, avg.apply(mu.apply(hi, ej)), entries)
    if strict_twist:
        _twist_commutation(
            "avg.twist", avg.compose(algebra.twist), algebra.twist.compose(avg), entries
        )
    return Report(entries)


def verify_rota_baxter(algebra: AlgebraBundle, rb: LinearMap) -> Report:
    if algebra.kind != "diassociative":
        raise ValueError(f"expected a diassociative bundle, got {algebra.kind!r}")
    if (rb.dim_out, rb.dim_in) != (algebra.dim, algebra.dim):
        raise ValueError("operator matrix shape does not match the algebra")
    dim = algebra.dim
    entries: list = []
    _twist_commutation(
        "rb.twist", rb.compose(algebra.twist), algebra.twist.compose(rb), entries
    )
    for name in ("dashv", "vdash"):
        op = algebra.op(name)
        for i in range(1, dim + 1):
            ei = basis_vector(dim, i)
            ri = rb.apply(ei)
            for j in range(1, dim + 1):
                ej = basis_vector(dim, j)
                rj = rb.apply(ej)
                lhs = op.apply(ri, rj)
                rhs = rb.apply(vec_add(op.apply(ri, ej), op.apply(ei, rj)))
                _residuals(f"rb.{name}", (i, j), lhs, rhs, entries)
    return Report(entries)


def verify_relative_averaging(rep: RepresentationBundle, avg: LinearMap) -> Report:
    if (avg.dim_out, avg.dim_in) != (rep.base.dim, rep.module_dim):
        raise ValueError("operator must map the module into the base algebra")
    entries: list = []
    m = rep.module_dim
    prec, succ = rep.base.op("prec"), rep.base.op("succ")
    for u in range(1, m + 1):
        fu = basis_vector(m, u)
        tu = avg.apply(fu)
        for v in range(1, m + 1):
            fv = basis_vector(m, v)
            tv = avg.apply(fv)
            lhs = prec.apply(tu, tv)
            _residuals(
                "ravg.prec.l", (u, v), lhs,
                avg.apply(rep.action("prec_l").apply(tu, fv)), entries,
            )
            _residuals(
                "ravg.prec.r", (u, v), lhs,
                avg.apply(rep.action("prec_r").apply(fu, tv)), entries,
            )
            lhs = succ.apply(tu, tv)
            _residuals(
                "ravg.succ.l", (u, v), lhs,
                avg.apply(rep.action("succ_l").apply(tu, fv)), entries,
            )
            _residuals(
                "ravg.succ.r", (u, v), lhs,
                avg.apply(rep.action("succ_r").apply(fu, tv)), entries,
            )
    _twist_commutation(
        "ravg.twist", avg.compose(rep.module_twist), rep.base.twist.compose(avg), entries
    )
    return Report(entries)


def verify_homomorphic_relative_averaging(
    action: ActionBundle, avg: LinearMap
) -> Report:
    relative = verify_relative_averaging(action.representation(), avg)
    homomorphism = check_homomorphism("dendriform", avg, action.acted, action.acting)
    return relative.merged(homomorphism)


def verify_averaging_quadri(algebra: AlgebraBundle, avg: LinearMap) -> Report:
    if algebra.kind != "quadri_dendriform":
        raise ValueError(f"expected a quadri_dendriform bundle, got {algebra.kind!r}")
    if (avg.dim_out, avg.dim_in) != (algebra.dim, algebra.dim):
        raise ValueError("operator matrix shape does not match the algebra")
    dim = algebra.dim
    entries: list = []
    _twist_commutation(
        "qavg.twist", avg.compose(algebra.twist), algebra.twist.compose(avg), entries
    )
    for name in sorted(algebra.ops):
        op = algebra.op(name)
        for i in range(1, dim + 1):
            ei = basis_vector(dim, i)
            hi = avg.apply(ei)
            for j in range(1, dim + 1):
                ej = basis_vector(dim, j)
                hj = avg.apply(ej)
                lhs = op.apply(hi, hj)
                _residuals(
                    f"qavg.{name}.a", (i, j), lhs, avg.apply(op.apply(hi, ej)), entries
                )
                _residuals(
                    f"qavg.{name}.b", (i, j), lhs, avg.apply(op.apply(ei, hj)), entries
                )
    return Report(entries)


def verify_operator(kind: str, context, matrix: LinearMap, strict_twist: bool = False) -> Report:
    """Dispatch on the operator kind; `context` is the matching bundle type."""
    if kind == "averaging_assoc":
        return verify_averaging_assoc(context, matrix, strict_twist=strict_twist)
    if kind == "rota_baxter":
        return verify_rota_baxter(context, matrix)
    if kind == "relative_averaging":
        if isinstance(context, ActionBundle):
            context = context.representation()
        if isinstance(context, AlgebraBundle):
            context = RepresentationBundle.adjoint(context)
        return verify_relative_averaging(context, matrix)
    if kind == "homomorphic_relative_averaging":
        if isinstance(context, AlgebraBundle):
            context = ActionBundle.adjoint(context)
        return verify_homomorphic_relative_averaging(context, matrix)
    if kind == "averaging_quadri":
        return verify_averaging_quadri(context, matrix)
    raise ValueError(f"unknown operator kind {kind!r}")


# ---------------------------------------------------------------------------
# graphs as subalgebras


def graph_is_subalgebra(
    container: AlgebraBundle, matrix: LinearMap, direction: str = "module_to_base"
) -> tuple:
    """Is the graph of the map closed under every container operation and
    the twist?

    direction="module_to_base": graph {(Tu, u)} in D + V, T: V -> D (hemi-
    semidirect containers).  direction="base_to_module": graph {(x, xi x)}
    in A + B, xi: A -> B (direct-sum containers).
    Returns (bool, Report) with witnesses indexed by graph parameters.
    """
    if direction == "module_to_base":
        d, m = matrix.dim_out, matrix.dim_in
        par_dim = m

        def graph_vector(u: int):
            top = matrix.apply(basis_vector(m, u))
            return tuple(top) + tuple(basis_vector(m, u))

        def membership_residual(w):
            top, bottom = w[:d], w[d:]
            return vec_sub(top, matrix.apply(bottom))

    elif direction == "base_to_module":
        da, db = matrix.dim_in, matrix.dim_out
        d, m = da, db
        par_dim = da

        def graph_vector(u: int):
            base = basis_vector(da, u)
            return tuple(base) + tuple(matrix.apply(base))

        def membership_residual(w):
            top, bottom = w[:d], w[d:]
            return vec_sub(bottom, matrix.apply(top))

    else:
        raise ValueError(f"unknown direction {direction!r}")

    if container.dim != d + m:
        raise ValueError("container dimension does not match the map")
    entries: list = []
    vectors = [graph_vector(u) for u in range(1, par_dim + 1)]
    for name in sorted(container.ops):
        op = container.op(name)
        for u, gu in enumerate(vectors, start=1):
            for v, gv in enumerate(vectors, start=1):
                residual = membership_residual(op.apply(gu, gv))
                for coord, value in enumerate(residual, start=1):
                    if value:
                        entries.append(Violation(f"graph.{name}", (u, v, coord), value))
    for u, gu in enumerate(vectors, start=1):
        residual = membership_residual(container.twist.apply(gu))
        for coord, value in enumerate(residual, start=1):
            if value:
                entries.append(Violation("graph.twist", (u, coord), value))
    report = Report(entries)
    return report.ok, report


# ---------------------------------------------------------------------------
# equation extraction and grid solving


def _context_parameters(context) -> frozenset:
    if isinstance(context, AlgebraBundle):
        return frozenset(context.parameters) | context.used_parameters()
    return context.used_parameters()


def _operator_shape(context, kind: str) -> tuple:
    if kind in ("averaging_assoc", "rota_baxter", "averaging_quadri"):
        return context.dim, context.dim
    if kind == "relative_averaging":
        if isinstance(context, ActionBundle):
            context = context.representation()
        if isinstance(context, AlgebraBundle):
            return context.dim, context.dim
        return context.base.dim, context.module_dim
    if kind == "homomorphic_relative_averaging":
        if isinstance(context, AlgebraBundle):
            return context.dim, context.dim
        return context.acting.dim, context.acted.dim
    raise ValueError(f"unknown operator kind {kind!r}")


def emit_operator_system(
    context, kind: str, unknown_prefix: str = "t", strict_twist: bool = False
) -> list:
    """The polynomial system in the unknown matrix entries t{i}{j} whose
    common zero set is exactly the operator variety; deterministic order."""
    rows, cols = _operator_shape(context, kind)
    names = [[f"{unknown_prefix}{i}{j}" for j in range(1, cols + 1)] for i in range(1, rows + 1)]
    taken = _context_parameters(context)
    clash = sorted(set(n for row in names for n in row) & taken)
    if clash:
        raise ValueError(f"unknown names collide with context parameters: {clash}")
    symbolic = LinearMap.from_rows(
        [[Polynomial.variable(n) for n in row] for row in names]
    )
    report = verify_operator(kind, context, symbolic, strict_twist=strict_twist)
    system: list = []
    seen = set()
    for violation in report.entries:
        if violation.residual not in seen:
            seen.add(violation.residual)
            system.append(violation.residual)
    return system


def _twist_pair(context, kind: str) -> tuple:
    """(inner twist on the domain, outer twist on the codomain) of the map."""
    if kind in ("averaging_assoc", "rota_baxter", "averaging_quadri"):
        return context.twist, context.twist
    if isinstance(context, ActionBundle):
        return context.acted.twist, context.acting.twist
    if isinstance(context, RepresentationBundle):
        return context.module_twist, context.base.twist
    return context.twist, context.twist


def solve_operators_grid(
    context, kind: str, grid, strict_twist: bool = False
) -> list:
    """Enumerate operator solutions with free coordinates over a rational grid.

    The linear twist-commutation constraints are solved exactly first (row
    echelon); the free coordinates of that solution space are then enumerated
    over the grid and filtered by the quadratic identities.  Completeness is
    claimed only relative to the grid.
    """
    rows, cols = _operator_shape(context, kind)
    if max(rows, cols) > 3:
        raise ValueError("grid solving is limited to dimensions <= 3")
    if _context_parameters(context):
        raise ValueError("grid solving needs a parameter-free context; specialize first")
    grid_values = sorted(Fraction(g) for g in set(grid))
    n_unknowns = rows * cols
    use_twist = kind in TWIST_BOUND_KINDS or (kind == "averaging_assoc" and strict_twist)
    if use_twist:
        inner, outer = _twist_pair(context, kind)
        beta = inner.to_fraction_rows()
        alpha = outer.to_fraction_rows()
        equations = []
        for i in range(rows):
            for j in range(cols):
                coeff = [Fraction(0)] * n_unknowns
                # (T beta - alpha T)[i][j] = sum_k T[i][k] beta[k][j] - alpha[i][k] T[k][j]
                for k in range(cols):
                    coeff[i * cols + k] += beta[k][j]
                for k in range(rows):
                    coeff[k * cols + j] -= alpha[i][k]
                equations.append(coeff)
        basis = linalg.nullspace(equations, ncols=n_unknowns)
    else:
        basis = [
            [Fraction(int(p == q)) for q in range(n_unknowns)]
            for p in range(n_unknowns)
        ]
    solutions = []
    for coefficients in itertools.product(grid_values, repeat=len(basis)):
        flat = [Fraction(0)] * n_unknowns
        for c, vec in zip(coefficients, basis):
            if c:
                flat = [a + c * b for a, b in zip(flat, vec)]
        candidate = LinearMap.from_fractions(
            [flat[r * cols : (r + 1) * cols] for r in range(rows)]
        )
        if verify_operator(kind, context, candidate, strict_twist=strict_twist).ok:
            solutions.append(candidate)
    solutions.sort(key=lambda m: tuple(cell.as_fraction() for row in m.entries for cell in row))
    return solutions


def family_membership(family: LinearMap, candidate: LinearMap):
    """Solve family(params) = candidate when family entries are affine in
    its parameters; returns the parameter binding or None."""
    if (family.dim_out, family.dim_in) != (candidate.dim_out, candidate.dim_in):
        raise ValueError("matrix shape mismatch")
    unknowns = sorted(family.parameters())
    if not unknowns:
        return {} if family == candidate else None
    rows = []
    rhs = []
    for r in range(family.dim_out):
        for c in range(family.dim_in):
            cell = family.entries[r][c]
            if cell.total_degree() > 1:
                raise ValueError("family entries must be affine in the parameters")
            coeff = {name: Fraction(0) for name in unknowns}
            const = Fraction(0)
            for mono, value in cell.terms:
                if not mono:
                    const = value
                else:
                    coeff[mono[0][0]] = value
            rows.append([coeff[name] for name in unknowns])
            rhs.append(candidate.entries[r][c].as_fraction() - const)
    solution = linalg.solve(rows, rhs)
    if solution is None:
        return None
    return dict(zip(unknowns, solution))
