"""Based finite-dimensional Hom-algebras as structure-constant tensors.

An algebra lives on a based vector space: each binary operation is a sparse
dim x dim x dim tensor of polynomials (e_i op e_j = sum_k c[i,j,k] e_k, with
1-based indices matching the tables' e_1, e_2, e_3), and the twist map alpha
is a polynomial matrix.  A bundle packages one algebra's kind tag, named
operations, twist, and declared parameter names.

Nothing here checks axioms; `validate()` checks only structural invariants
(op-name set vs kind, index ranges, parameter declarations).  Axiom checking
lives in `axioms`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .poly import Polynomial
from .report import Report, Violation

Vector = tuple

# Operation names required by each algebra kind.
KIND_OPS: dict[str, frozenset] = {
    "associative": frozenset({"mu"}),
    "dendriform": frozenset({"prec", "succ"}),
    "diassociative": frozenset({"dashv", "vdash"}),
    "triassociative": frozenset({"dashv", "vdash", "perp"}),
    "quadri_dendriform": frozenset(
        {"prec_vdash", "prec_dashv", "succ_vdash", "succ_dashv"}
    ),
    "six_dendriform": frozenset(
        {"prec_vdash", "prec_dashv", "succ_vdash", "succ_dashv", "prec_perp", "succ_perp"}
    ),
}

ACTION_NAMES = ("prec_l", "succ_l", "prec_r", "succ_r")


class ModelError(ValueError):
    """Malformed input data (file shape, duplicate keys, bad polynomial text)."""


# ---------------------------------------------------------------------------
# vectors


def zero_vector(dim: int) -> Vector:
    return (Polynomial.zero(),) * dim


def basis_vector(dim: int, index: int) -> Vector:
    if not 1 <= index <= dim:
        raise ValueError(f"basis index {index} out of range 1..{dim}")
    return tuple(
        Polynomial.one() if k == index - 1 else Polynomial.zero() for k in range(dim)
    )


def vec_add(a: Vector, b: Vector) -> Vector:
    if len(a) != len(b):
        raise ValueError("vector dimension mismatch")
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Vector, b: Vector) -> Vector:
    if len(a) != len(b):
        raise ValueError("vector dimension mismatch")
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(scalar, v: Vector) -> Vector:
    if isinstance(scalar, (int, Fraction)):
        scalar = Polynomial.constant(scalar)
    return tuple(scalar * x for x in v)


def vec_is_zero(v: Vector) -> bool:
    return all(x.is_zero() for x in v)


def vec_specialize(v: Vector, bindings: Mapping) -> Vector:
    return tuple(x.specialize(bindings) for x in v)


def vec_to_fractions(v: Vector) -> tuple:
    return tuple(x.as_fraction() for x in v)


def vec_from_fractions(values) -> Vector:
    return tuple(Polynomial.constant(x) for x in values)


# ---------------------------------------------------------------------------
# linear maps


@dataclass(frozen=True)
class LinearMap:
    dim_out: int
    dim_in: int
    entries: tuple  # rows, each a tuple of Polynomial

    def __post_init__(self):
        if len(self.entries) != self.dim_out or any(
            len(row) != self.dim_in for row in self.entries
        ):
            raise ValueError("matrix shape does not match declared dimensions")

    @staticmethod
    def from_rows(rows: Iterable[Iterable[Polynomial]]) -> "LinearMap":
        entries = tuple(tuple(row) for row in rows)
        return LinearMap(len(entries), len(entries[0]) if entries else 0, entries)

    @staticmethod
    def from_strings(rows: Iterable[Iterable[str]]) -> "LinearMap":
        return LinearMap.from_rows(
            [[Polynomial.parse(cell) for cell in row] for row in rows]
        )

    @staticmethod
    def from_fractions(rows) -> "LinearMap":
        return LinearMap.from_rows(
            [[Polynomial.constant(v) for v in row] for row in rows]
        )

    @staticmethod
    def identity(dim: int) -> "LinearMap":
        return LinearMap.from_rows(
            [
                [Polynomial.one() if i == j else Polynomial.zero() for j in range(dim)]
                for i in range(dim)
            ]
        )

    @staticmethod
    def zero(dim_out: int, dim_in: int) -> "LinearMap":
        return LinearMap.from_rows(
            [[Polynomial.zero()] * dim_in for _ in range(dim_out)]
        )

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.dim_in:
            raise ValueError(
                f"map expects dimension {self.dim_in}, got vector of length {len(v)}"
            )
        out = []
        for row in self.entries:
            acc = Polynomial.zero()
            for cell, coord in zip(row, v):
                if cell and coord:
                    acc = acc + cell * coord
            out.append(acc)
        return tuple(out)

    def compose(self, inner: "LinearMap") -> "LinearMap":
        """Matrix of self o inner."""
        if self.dim_in != inner.dim_out:
            raise ValueError("composition dimension mismatch")
        rows = []
        for i in range(self.dim_out):
            row = []
            for j in range(inner.dim_in):
                acc = Polynomial.zero()
                for k in range(self.dim_in):
                    acc = acc + self.entries[i][k] * inner.entries[k][j]
                row.append(acc)
            rows.append(row)
        return LinearMap.from_rows(rows)

    def add(self, other: "LinearMap") -> "LinearMap":
        if (self.dim_out, self.dim_in) != (other.dim_out, other.dim_in):
            raise ValueError("matrix shape mismatch")
        return LinearMap.from_rows(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ]
        )

    def specialize(self, bindings: Mapping) -> "LinearMap":
        return LinearMap.from_rows(
            [[cell.specialize(bindings) for cell in row] for row in self.entries]
        )

    def parameters(self) -> frozenset:
        names: set = set()
        for row in self.entries:
            for cell in row:
                names |= cell.parameters()
        return frozenset(names)

    def is_parameter_free(self) -> bool:
        return not self.parameters()

    def to_fraction_rows(self):
        return [[cell.as_fraction() for cell in row] for row in self.entries]

    def determinant(self) -> Polynomial:
        """Exact symbolic determinant by cofactor expansion (small dims)."""
        if self.dim_out != self.dim_in:
            raise ValueError("determinant needs a square matrix")
        return _poly_det([list(row) for row in self.entries])

    @staticmethod
    def block_diag(a: "LinearMap", b: "LinearMap") -> "LinearMap":
        rows = []
        for i in range(a.dim_out):
            rows.append(list(a.entries[i]) + [Polynomial.zero()] * b.dim_in)
        for i in range(b.dim_out):
            rows.append([Polynomial.zero()] * a.dim_in + list(b.entries[i]))
        return LinearMap.from_rows(rows)


def _poly_det(rows) -> Polynomial:
    n = len(rows)
    if n == 0:
        return Polynomial.one()
    if n == 1:
        return rows[0][0]
    acc = Polynomial.zero()
    for j in range(n):
        if rows[0][j].is_zero():
            continue
        minor = [[row[c] for c in range(n) if c != j] for row in rows[1:]]
        term = rows[0][j] * _poly_det(minor)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


# ---------------------------------------------------------------------------
# bilinear operations


@dataclass(frozen=True)
class BilinearOp:
    """Sparse structure-constant tensor; zero entries are never stored.

    Algebra operations are square (all three dims equal); representation and
    action tensors reuse the same shape with mixed dims, so one evaluation
    code path serves both.
    """

    dim_left: int
    dim_right: int
    dim_out: int
    constants: tuple  # sorted tuple of ((i, j, k), Polynomial)

    @staticmethod
    def from_entries(dim_left: int, dim_right: int, dim_out: int, entries) -> "BilinearOp":
        acc: dict = {}
        for i, j, k, poly in entries:
            key = (i, j, k)
            acc[key] = acc[key] + poly if key in acc else poly
        constants = tuple(
            sorted((key, poly) for key, poly in acc.items() if not poly.is_zero())
        )
        return BilinearOp(dim_left, dim_right, dim_out, constants)

    @staticmethod
    def square(dim: int, entries) -> "BilinearOp":
        return BilinearOp.from_entries(dim, dim, dim, entries)

    @staticmethod
    def zero_square(dim: int) -> "BilinearOp":
        return BilinearOp(dim, dim, dim, ())

    @property
    def dim(self) -> int:
        if self.dim_left == self.dim_right == self.dim_out:
            return self.dim_left
        raise ValueError("mixed-dimension tensor has no single dim")

    def apply(self, x: Vector, y: Vector) -> Vector:
        if len(x) != self.dim_left or len(y) != self.dim_right:
            raise ValueError(
                f"operation expects {self.dim_left} x {self.dim_right}, "
                f"got {len(x)} x {len(y)}"
            )
        out = [Polynomial.zero()] * self.dim_out
        for (i, j, k), coeff in self.constants:
            xi = x[i - 1]
            if not xi:
                continue
            yj = y[j - 1]
            if not yj:
                continue
            out[k - 1] = out[k - 1] + xi * yj * coeff
        return tuple(out)

    def entry(self, i: int, j: int, k: int) -> Polynomial:
        for key, poly in self.constants:
            if key == (i, j, k):
                return poly
        return Polynomial.zero()

    def add(self, other: "BilinearOp") -> "BilinearOp":
        if (self.dim_left, self.dim_right, self.dim_out) != (
            other.dim_left,
            other.dim_right,
            other.dim_out,
        ):
            raise ValueError("tensor shape mismatch")
        return BilinearOp.from_entries(
            self.dim_left,
            self.dim_right,
            self.dim_out,
            [(i, j, k, c) for (i, j, k), c in self.constants + other.constants],
        )

    def negate(self) -> "BilinearOp":
        return BilinearOp(
            self.dim_left,
            self.dim_right,
            self.dim_out,
            tuple((key, -c) for key, c in self.constants),
        )

    def specialize(self, bindings: Mapping) -> "BilinearOp":
        return BilinearOp.from_entries(
            self.dim_left,
            self.dim_right,
            self.dim_out,
            [(i, j, k, c.specialize(bindings)) for (i, j, k), c in self.constants],
        )

    def parameters(self) -> frozenset:
        names: set = set()
        for _, poly in self.constants:
            names |= poly.parameters()
        return frozenset(names)

    def is_zero(self) -> bool:
        return not self.constants


# ---------------------------------------------------------------------------
# bundles


@dataclass(frozen=True, eq=True)
class AlgebraBundle:
    kind: str
    dim: int
    ops: dict  # op name -> BilinearOp
    twist: LinearMap
    parameters: tuple  # declared parameter names, sorted

    def op(self, name: str) -> BilinearOp:
        return self.ops[name]

    def used_parameters(self) -> frozenset:
        names = set(self.twist.parameters())
        for op in self.ops.values():
            names |= op.parameters()
        return frozenset(names)

    def is_parameter_free(self) -> bool:
        return not self.used_parameters()

    def specialize(self, bindings: Mapping) -> "AlgebraBundle":
        for name in bindings:
            if name not in self.parameters:
                raise ValueError(f"binding undeclared parameter {name!r}")
        return AlgebraBundle(
            kind=self.kind,
            dim=self.dim,
            ops={name: op.specialize(bindings) for name, op in self.ops.items()},
            twist=self.twist.specialize(bindings),
            parameters=tuple(p for p in self.parameters if p not in bindings),
        )

    def validate(self) -> Report:
        entries = []

        def flag(template: str, witness: tuple = ()):
            entries.append(Violation(template, witness, Polynomial.zero()))

        if self.kind not in KIND_OPS:
            flag(f"structure.unknown-kind:{self.kind}")
            return Report(entries)
        required = KIND_OPS[self.kind]
        for name in sorted(set(self.ops) - required):
            flag(f"structure.unexpected-op:{name}")
        for name in sorted(required - set(self.ops)):
            flag(f"structure.missing-op:{name}")
        if (self.twist.dim_out, self.twist.dim_in) != (self.dim, self.dim):
            flag("structure.twist-dim")
        used = set(self.twist.parameters())
        for name in sorted(set(self.ops) & required):
            op = self.ops[name]
            if (op.dim_left, op.dim_right, op.dim_out) != (self.dim,) * 3:
                flag(f"structure.op-dim:{name}")
                continue
            for (i, j, k), poly in op.constants:
                if not all(1 <= v <= self.dim for v in (i, j, k)):
                    flag(f"structure.index-range:{name}", (i, j, k))
                used |= poly.parameters()
        for name in sorted(used - set(self.parameters)):
            flag(f"structure.undeclared-parameter:{name}")
        return Report(entries)


@dataclass(frozen=True, eq=True)
class RepresentationBundle:
    """A module over a dendriform algebra: four action tensors plus beta."""

    base: AlgebraBundle
    module_dim: int
    actions: dict  # prec_l, succ_l: D x M -> M ; prec_r, succ_r: M x D -> M
    module_twist: LinearMap

    @staticmethod
    def adjoint(bundle: AlgebraBundle) -> "RepresentationBundle":
        if bundle.kind != "dendriform":
            raise ValueError("adjoint representation needs a dendriform bundle")
        return RepresentationBundle(
            base=bundle,
            module_dim=bundle.dim,
            actions={
                "prec_l": bundle.op("prec"),
                "succ_l": bundle.op("succ"),
                "prec_r": bundle.op("prec"),
                "succ_r": bundle.op("succ"),
            },
            module_twist=bundle.twist,
        )

    def action(self, name: str) -> BilinearOp:
        return self.actions[name]

    def used_parameters(self) -> frozenset:
        names = set(self.base.used_parameters()) | set(self.module_twist.parameters())
        for op in self.actions.values():
            names |= op.parameters()
        return frozenset(names)

    def specialize(self, bindings: Mapping) -> "RepresentationBundle":
        return RepresentationBundle(
            base=self.base.specialize(bindings),
            module_dim=self.module_dim,
            actions={n: op.specialize(bindings) for n, op in self.actions.items()},
            module_twist=self.module_twist.specialize(bindings),
        )

    def validate(self) -> Report:
        entries = list(self.base.validate().entries)

        def flag(template: str):
            entries.append(Violation(template, (), Polynomial.zero()))

        if self.base.kind != "dendriform":
            flag("structure.representation-base-kind")
        d, m = self.base.dim, self.module_dim
        shapes = {
            "prec_l": (d, m, m),
            "succ_l": (d, m, m),
            "prec_r": (m, d, m),
            "succ_r": (m, d, m),
        }
        for name, shape in shapes.items():
            op = self.actions.get(name)
            if op is None:
                flag(f"structure.missing-action:{name}")
            elif (op.dim_left, op.dim_right, op.dim_out) != shape:
                flag(f"structure.action-dim:{name}")
        if (self.module_twist.dim_out, self.module_twist.dim_in) != (m, m):
            flag("structure.module-twist-dim")
        return Report(entries)


@dataclass(frozen=True, eq=True)
class ActionBundle:
    """A dendriform algebra acting on another dendriform algebra.

    `acted` lives on the module space; its twist doubles as the module twist
    of the underlying representation.
    """

    acting: AlgebraBundle
    acted: AlgebraBundle
    actions: dict

    @staticmethod
    def adjoint(bundle: AlgebraBundle) -> "ActionBundle":
        rep = RepresentationBundle.adjoint(bundle)
        return ActionBundle(acting=bundle, acted=bundle, actions=rep.actions)

    def representation(self) -> RepresentationBundle:
        return RepresentationBundle(
            base=self.acting,
            module_dim=self.acted.dim,
            actions=self.actions,
            module_twist=self.acted.twist,
        )

    def used_parameters(self) -> frozenset:
        names = set(self.acting.used_parameters()) | set(self.acted.used_parameters())
        for op in self.actions.values():
            names |= op.parameters()
        return frozenset(names)

    def specialize(self, bindings: Mapping) -> "ActionBundle":
        return ActionBundle(
            acting=self.acting.specialize(bindings),
            acted=self.acted.specialize(bindings),
            actions={n: op.specialize(bindings) for n, op in self.actions.items()},
        )

    def validate(self) -> Report:
        entries = list(self.representation().validate().entries)
        acted_report = self.acted.validate()
        entries.extend(acted_report.entries)
        if self.acted.kind != "dendriform":
            entries.append(
                Violation("structure.acted-kind", (), Polynomial.zero())
            )
        return Report(entries)


# ---------------------------------------------------------------------------
# evaluation entry points named in the interface


def op_apply(op: BilinearOp, x: Vector, y: Vector) -> Vector:
    return op.apply(x, y)


def map_apply(m: LinearMap, x: Vector) -> Vector:
    return m.apply(x)


def bundle_specialize(bundle: AlgebraBundle, bindings: Mapping) -> AlgebraBundle:
    return bundle.specialize(bindings)


def validate_bundle(bundle: AlgebraBundle) -> Report:
    return bundle.validate()
