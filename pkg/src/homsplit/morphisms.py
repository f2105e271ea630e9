"""Isomorphism-invariant fingerprints, morphism verification, and a bounded
brute-force isomorphism oracle.

Fingerprints are necessary conditions computed exactly over the rationals:
unequal fingerprints certify non-isomorphism; equal ones decide nothing.
The grid search is a desk-scale oracle only -- "no isomorphism within the
grid" is conclusive relative to the grid, never absolutely.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .axioms import check_homomorphism
from .model import AlgebraBundle, BilinearOp, LinearMap, basis_vector, vec_to_fractions
from .poly import Polynomial
from .report import Report, Violation


@dataclass(frozen=True)
class Fingerprint:
    op_span_dims: tuple  # ((op name, product-span dimension), ...) sorted
    total_span_dim: int
    twist_rank: int
    twist_charpoly: tuple  # monic coefficients of det(xI - alpha)
    annihilator_dim: int

    def to_dict(self) -> dict:
        return {
            "op_span_dims": {name: d for name, d in self.op_span_dims},
            "total_span_dim": self.total_span_dim,
            "twist_rank": self.twist_rank,
            "twist_charpoly": [str(c) for c in self.twist_charpoly],
            "annihilator_dim": self.annihilator_dim,
        }

    def differing_fields(self, other: "Fingerprint") -> list:
        out = []
        for name in (
            "op_span_dims",
            "total_span_dim",
            "twist_rank",
            "twist_charpoly",
            "annihilator_dim",
        ):
            if getattr(self, name) != getattr(other, name):
                out.append(name)
        return out


def _product_rows(bundle: AlgebraBundle, op: BilinearOp) -> list:
    rows = []
    for i in range(1, bundle.dim + 1):
        for j in range(1, bundle.dim + 1):
            rows.append(
                list(
                    vec_to_fractions(
                        op.apply(basis_vector(bundle.dim, i), basis_vector(bundle.dim, j))
                    )
                )
            )
    return rows


def fingerprint(bundle: AlgebraBundle) -> Fingerprint:
    if bundle.used_parameters():
        raise ValueError("fingerprints are defined for parameter-free bundles only")
    op_dims = []
    all_rows = []
    for name in sorted(bundle.ops):
        rows = _product_rows(bundle, bundle.op(name))
        op_dims.append((name, linalg.rank(rows)))
        all_rows.extend(rows)
    twist_rows = bundle.twist.to_fraction_rows()
    # annihilator: x with x op y = y op x = 0 for every op and basis y
    equations = []
    n = bundle.dim
    for name in sorted(bundle.ops):
        op = bundle.op(name)
        table = {key: c.as_fraction() for key, c in op.constants}
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                equations.append([table.get((i, j, k), Fraction(0)) for i in range(1, n + 1)])
                equations.append([table.get((j, i, k), Fraction(0)) for i in range(1, n + 1)])
    annihilator = len(linalg.nullspace(equations, ncols=n)) if equations else n
    return Fingerprint(
        op_span_dims=tuple(op_dims),
        total_span_dim=linalg.rank(all_rows) if all_rows else 0,
        twist_rank=linalg.rank(twist_rows),
        twist_charpoly=tuple(linalg.charpoly(twist_rows)),
        annihilator_dim=annihilator,
    )


def push_forward(bundle: AlgebraBundle, basis_change: LinearMap) -> AlgebraBundle:
    """Transport the structure along an invertible rational change of basis S:
    new ops x op' y = S^{-1}(Sx op Sy), new twist S^{-1} alpha S."""
    if (basis_change.dim_out, basis_change.dim_in) != (bundle.dim, bundle.dim):
        raise ValueError("basis change shape mismatch")
    inverse_rows = linalg.inverse(basis_change.to_fraction_rows())
    if inverse_rows is None:
        raise ValueError("basis change matrix is singular")
    s_inv = LinearMap.from_fractions(inverse_rows)
    dim = bundle.dim

    def transport(op: BilinearOp) -> BilinearOp:
        entries = []
        for i in range(1, dim + 1):
            si = basis_change.apply(basis_vector(dim, i))
            for j in range(1, dim + 1):
                sj = basis_change.apply(basis_vector(dim, j))
                w = s_inv.apply(op.apply(si, sj))
                for k, poly in enumerate(w, start=1):
                    if poly:
                        entries.append((i, j, k, poly))
        return BilinearOp.from_entries(dim, dim, dim, entries)

    return AlgebraBundle(
        kind=bundle.kind,
        dim=dim,
        ops={name: transport(op) for name, op in bundle.ops.items()},
        twist=s_inv.compose(bundle.twist).compose(basis_change),
        parameters=bundle.parameters,
    )


def verify_isomorphism(
    kind: str, linear: LinearMap, source: AlgebraBundle, target: AlgebraBundle
) -> Report:
    """Homomorphism conditions plus exact invertibility.

    Invertibility is a nonzero determinant as a polynomial (exact rational
    inverse when parameter-free).  A singular matrix yields the violation
    "iso.singular" with sentinel residual 1 (there is no nonzero residual
    polynomial to attach to a vanished determinant).
    """
    report = check_homomorphism(kind, linear, source, target)
    det = linear.determinant()
    if det.is_zero():
        report = report.merged(
            Report([Violation("iso.singular", (), Polynomial.one())])
        )
    return report


def brute_force_iso_search(
    source: AlgebraBundle, target: AlgebraBundle, grid
) -> LinearMap | None:
    """First grid matrix (in canonical row-major order) that is an
    isomorphism source -> target, or None.  Dimensions <= 3 only."""
    if source.dim != target.dim:
        return None
    if source.dim > 3:
        raise ValueError("brute-force isomorphism search is limited to dim <= 3")
    if source.used_parameters() or target.used_parameters():
        raise ValueError("isomorphism search needs parameter-free bundles")
    if fingerprint(source) != fingerprint(target):
        return None
    n = source.dim
    grid_values = sorted(Fraction(g) for g in set(grid))
    alpha_a = source.twist.to_fraction_rows()
    alpha_b = target.twist.to_fraction_rows()
    for flat in itertools.product(grid_values, repeat=n * n):
        rows = [list(flat[r * n : (r + 1) * n]) for r in range(n)]
        if linalg.determinant(rows) == 0:
            continue
        if linalg.matmul(rows, alpha_a) != linalg.matmul(alpha_b, rows):
            continue
        candidate = LinearMap.from_fractions(rows)
        if verify_isomorphism(source.kind, candidate, source, target).ok:
            return candidate
    return None
