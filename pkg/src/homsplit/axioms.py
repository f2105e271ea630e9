"""Identity templates and per-kind axiom checkers.

Every defining identity is a template: an expression tree over placeholders
combining named operations, twist applications, and formal sums.  A checker
instantiates the placeholders with every tuple of basis vectors and demands
that each coordinate of lhs - rhs be the zero polynomial, symbolically in
all declared parameters.  Violations carry the basis witness with the
coordinate index appended, and the residual polynomial.

Chained equalities (a = b = c) are split pairwise as first=second (".a") and
first=third (".b"); the implied second=third (".c") templates are available
behind `include_implied` for cross-checking only.

Template id conventions: "dend.1"-"dend.3", "assoc.1", "dias.4"-"dias.8"
(numbered as in the source equations), "quadri.Hq1.a" etc., "tri.assoc" and
"tri.mixed.1"-"tri.mixed.5", "six.dend.*" / "six.sq1"-"six.sq17",
"rep.I.1"-"rep.III.3", "act.13"-"act.21", "mult.<op>", "hom.<op>"/"hom.twist".

The sq15 identity mixes two operations across its sides in the source; both
the literal reading and the symmetrized one are implemented, selectable via
`sq15="literal"` (default) or `sq15="symmetric"`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .model import (
    ActionBundle,
    AlgebraBundle,
    KIND_OPS,
    LinearMap,
    RepresentationBundle,
    Vector,
    basis_vector,
    vec_add,
)
from .report import Report, Violation

SQ15_READINGS = ("literal", "symmetric")


# ---------------------------------------------------------------------------
# expression trees


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class App:
    map_name: str
    arg: object


@dataclass(frozen=True)
class Op:
    op_name: str
    left: object
    right: object


@dataclass(frozen=True)
class Sum:
    terms: tuple


def S(*terms) -> Sum:
    return Sum(tuple(terms))


@dataclass(frozen=True)
class Template:
    id: str
    variables: tuple  # ((placeholder, space), ...) in witness order
    lhs: object
    rhs: object


def _eval(expr, env: dict, ops: dict, maps: dict) -> Vector:
    if isinstance(expr, Var):
        return env[expr.name]
    if isinstance(expr, App):
        return maps[expr.map_name].apply(_eval(expr.arg, env, ops, maps))
    if isinstance(expr, Op):
        return ops[expr.op_name].apply(
            _eval(expr.left, env, ops, maps), _eval(expr.right, env, ops, maps)
        )
    if isinstance(expr, Sum):
        parts = [_eval(t, env, ops, maps) for t in expr.terms]
        acc = parts[0]
        for p in parts[1:]:
            acc = vec_add(acc, p)
        return acc
    raise TypeError(f"not an expression node: {expr!r}")


def evaluate_templates(templates, dims: dict, ops: dict, maps: dict) -> Report:
    """Evaluate templates over all basis tuples; exact zero residual to pass."""
    entries = []
    for template in templates:
        ranges = [range(1, dims[space] + 1) for _, space in template.variables]
        for combo in itertools.product(*ranges):
            env = {
                name: basis_vector(dims[space], index)
                for (name, space), index in zip(template.variables, combo)
            }
            lhs = _eval(template.lhs, env, ops, maps)
            rhs = _eval(template.rhs, env, ops, maps)
            for coord, (a, b) in enumerate(zip(lhs, rhs), start=1):
                residual = a - b
                if residual:
                    entries.append(
                        Violation(template.id, combo + (coord,), residual)
                    )
    return Report(entries)


# ---------------------------------------------------------------------------
# template sets

_X, _Y, _Z = Var("x"), Var("y"), Var("z")
_DDD = (("x", "D"), ("y", "D"), ("z", "D"))


def _t(tid: str, lhs, rhs, variables=_DDD) -> Template:
    return Template(tid, variables, lhs, rhs)


def dendriform_templates(prec="prec", succ="succ", prefix="dend") -> list:
    ax, az = App("alpha", _X), App("alpha", _Z)
    return [
        _t(
            f"{prefix}.1",
            Op(prec, ax, S(Op(prec, _Y, _Z), Op(succ, _Y, _Z))),
            Op(prec, Op(prec, _X, _Y), az),
        ),
        _t(
            f"{prefix}.2",
            Op(succ, ax, Op(prec, _Y, _Z)),
            Op(prec, Op(succ, _X, _Y), az),
        ),
        _t(
            f"{prefix}.3",
            Op(succ, ax, Op(succ, _Y, _Z)),
            Op(succ, S(Op(prec, _X, _Y), Op(succ, _X, _Y)), az),
        ),
    ]


def associative_templates(mu="mu", prefix="assoc") -> list:
    ax, az = App("alpha", _X), App("alpha", _Z)
    return [
        _t(f"{prefix}.1", Op(mu, ax, Op(mu, _Y, _Z)), Op(mu, Op(mu, _X, _Y), az))
    ]


def diassociative_templates(dashv="dashv", vdash="vdash", prefix="dias") -> list:
    ax, az = App("alpha", _X), App("alpha", _Z)
    left = lambda op1, op2: Op(op2, Op(op1, _X, _Y), az)
    right = lambda op1, op2: Op(op1, ax, Op(op2, _Y, _Z))
    return [
        _t(f"{prefix}.4", left(dashv, dashv), right(dashv, dashv)),
        _t(f"{prefix}.5", left(dashv, dashv), right(dashv, vdash)),
        _t(f"{prefix}.6", left(vdash, dashv), right(vdash, dashv)),
        _t(f"{prefix}.7", left(dashv, vdash), right(vdash, vdash)),
        _t(f"{prefix}.8", left(vdash, vdash), right(vdash, vdash)),
    ]


def _chain(tid: str, first, second, third, include_implied: bool) -> list:
    out = [_t(f"{tid}.a", first, second), _t(f"{tid}.b", first, third)]
    if include_implied:
        out.append(_t(f"{tid}.c", second, third))
    return out


def quadri_templates(include_implied: bool = False) -> list:
    pv, pd, sv, sd = "prec_vdash", "prec_dashv", "succ_vdash", "succ_dashv"
    x, y, z = _X, _Y, _Z
    ax, az = App("alpha", x), App("alpha", z)
    ts: list = []
    ts += _chain(
        "quadri.Hq1",
        Op(pv, Op(pv, x, y), az),
        Op(pv, Op(pd, x, y), az),
        Op(pv, ax, S(Op(pv, y, z), Op(sv, y, z))),
        include_implied,
    )
    ts += _chain(
        "quadri.Hq2",
        Op(pv, Op(sv, x, y), az),
        Op(pv, Op(sd, x, y), az),
        Op(sv, ax, Op(pv, y, z)),
        include_implied,
    )
    ts += _chain(
        "quadri.Hq3",
        Op(sv, ax, Op(sv, y, z)),
        Op(sv, S(Op(pv, x, y), Op(sv, x, y)), az),
        Op(sv, S(Op(pd, x, y), Op(sd, x, y)), az),
        include_implied,
    )
    ts += _chain(
        "quadri.Hq4",
        Op(sv, ax, Op(sv, y, z)),
        Op(sv, S(Op(pd, x, y), Op(sv, x, y)), az),
        Op(sv, S(Op(pv, x, y), Op(sd, x, y)), az),
        include_implied,
    )
    ts.append(
        _t(
            "quadri.Hq5",
            Op(pd, Op(pv, x, y), az),
            Op(pv, ax, S(Op(pd, y, z), Op(sd, y, z))),
        )
    )
    ts.append(_t("quadri.Hq6", Op(pd, Op(sv, x, y), az), Op(sv, ax, Op(pd, y, z))))
    ts.append(
        _t(
            "quadri.Hq7",
            Op(sv, ax, Op(sd, y, z)),
            Op(sd, S(Op(pv, x, y), Op(sv, x, y)), az),
        )
    )
    ts += _chain(
        "quadri.Hq8",
        Op(pd, Op(pd, x, y), az),
        Op(pd, ax, S(Op(pv, y, z), Op(sv, y, z))),
        Op(pd, ax, S(Op(pd, y, z), Op(sd, y, z))),
        include_implied,
    )
    ts += _chain(
        "quadri.Hq9",
        Op(pd, Op(pd, x, y), az),
        Op(pd, ax, S(Op(pv, y, z), Op(sd, y, z))),
        Op(pd, ax, S(Op(pd, y, z), Op(sv, y, z))),
        include_implied,
    )
    ts += _chain(
        "quadri.Hq10",
        Op(pd, Op(sd, x, y), az),
        Op(sd, ax, Op(pv, y, z)),
        Op(sd, ax, Op(pd, y, z)),
        include_implied,
    )
    ts += _chain(
        "quadri.Hq11",
        Op(sd, ax, Op(sv, y, z)),
        Op(sd, ax, Op(sd, y, z)),
        Op(sd, S(Op(pd, x, y), Op(sd, x, y)), az),
        include_implied,
    )
    return ts


def triassociative_templates() -> list:
    perp = "perp"
    x, y, z = _X, _Y, _Z
    ax, az = App("alpha", x), App("alpha", z)
    ts = diassociative_templates(prefix="dias")
    ts.append(
        _t("tri.assoc", Op(perp, ax, Op(perp, y, z)), Op(perp, Op(perp, x, y), az))
    )
    ts += [
        _t("tri.mixed.1", Op("dashv", Op("dashv", x, y), az), Op("dashv", ax, Op(perp, y, z))),
        _t("tri.mixed.2", Op(perp, Op("vdash", x, y), az), Op("vdash", ax, Op(perp, y, z))),
        _t("tri.mixed.3", Op("dashv", Op(perp, x, y), az), Op(perp, ax, Op("dashv", y, z))),
        _t("tri.mixed.4", Op("vdash", Op(perp, x, y), az), Op("vdash", ax, Op("vdash", y, z))),
        _t("tri.mixed.5", Op(perp, Op("dashv", x, y), az), Op(perp, ax, Op("vdash", y, z))),
    ]
    return ts


def six_templates(sq15: str = "literal", include_implied: bool = False) -> list:
    if sq15 not in SQ15_READINGS:
        raise ValueError(f"sq15 must be one of {SQ15_READINGS}")
    pv, pd, sv, sd = "prec_vdash", "prec_dashv", "succ_vdash", "succ_dashv"
    pp, sp = "prec_perp", "succ_perp"
    x, y, z = _X, _Y, _Z
    ax, az = App("alpha", x), App("alpha", z)
    ts = dendriform_templates(prec=pp, succ=sp, prefix="six.dend")
    ts += quadri_templates(include_implied=include_implied)
    ts += [
        _t("six.sq1", Op(pp, Op(pv, x, y), az), Op(pv, ax, S(Op(pp, y, z), Op(sp, y, z)))),
        _t("six.sq2", Op(pp, Op(sv, x, y), az), Op(sv, ax, Op(pp, y, z))),
        _t("six.sq3", Op(sv, ax, Op(sp, y, z)), Op(sp, S(Op(pv, x, y), Op(sv, x, y)), az)),
        _t("six.sq4", Op(pp, Op(pd, x, y), az), Op(pp, ax, S(Op(pv, y, z), Op(sv, y, z)))),
        _t("six.sq5", Op(pp, Op(sd, x, y), az), Op(sp, ax, Op(pv, y, z))),
        _t("six.sq6", Op(sp, ax, Op(sv, y, z)), Op(sp, S(Op(pd, x, y), Op(sd, x, y)), az)),
        _t("six.sq7", Op(pd, Op(pp, x, y), az), Op(pp, ax, S(Op(pd, y, z), Op(sd, y, z)))),
        _t("six.sq8", Op(pd, Op(sp, x, y), az), Op(sp, ax, Op(pd, y, z))),
        _t("six.sq9", Op(sp, ax, Op(sd, y, z)), Op(sd, S(Op(pp, x, y), Op(sp, x, y)), az)),
    ]
    ts += _chain(
        "six.sq10",
        Op(pv, Op(pp, x, y), az),
        Op(pv, Op(pv, x, y), az),
        Op(pv, Op(pd, x, y), az),
        include_implied,
    )
    ts += _chain(
        "six.sq11",
        Op(pv, Op(sp, x, y), az),
        Op(pv, Op(sv, x, y), az),
        Op(pv, Op(sd, x, y), az),
        include_implied,
    )
    ts += _chain(
        "six.sq12",
        Op(sv, Op(pp, x, y), az),
        Op(sv, Op(pv, x, y), az),
        Op(sv, Op(pd, x, y), az),
        include_implied,
    )
    ts += _chain(
        "six.sq13",
        Op(sv, Op(sp, x, y), az),
        Op(sv, Op(sv, x, y), az),
        Op(sv, Op(sd, x, y), az),
        include_implied,
    )
    ts += _chain(
        "six.sq14",
        Op(pd, ax, Op(pp, y, z)),
        Op(pd, ax, Op(pv, y, z)),
        Op(pd, ax, Op(pd, y, z)),
        include_implied,
    )
    rhs_op = pd if sq15 == "literal" else sd
    ts += _chain(
        "six.sq15",
        Op(sd, ax, Op(pp, y, z)),
        Op(rhs_op, ax, Op(pv, y, z)),
        Op(rhs_op, ax, Op(pd, y, z)),
        include_implied,
    )
    ts += _chain(
        "six.sq16",
        Op(sd, ax, Op(sp, y, z)),
        Op(sd, ax, Op(sv, y, z)),
        Op(sd, ax, Op(sd, y, z)),
        include_implied,
    )
    ts += _chain(
        "six.sq17",
        Op(pd, ax, Op(sp, y, z)),
        Op(pd, ax, Op(sv, y, z)),
        Op(pd, ax, Op(sd, y, z)),
        include_implied,
    )
    return ts


def representation_templates() -> list:
    x, y, m = Var("x"), Var("y"), Var("m")
    ax, ay = App("alpha", x), App("alpha", y)
    bm = App("beta", m)
    ddm = (("x", "D"), ("y", "D"), ("m", "M"))
    mdd = (("m", "M"), ("x", "D"), ("y", "D"))
    dmd = (("x", "D"), ("m", "M"), ("y", "D"))
    return [
        _t(
            "rep.I.1",
            Op("prec_l", Op("prec", x, y), bm),
            Op("prec_l", ax, S(Op("prec_l", y, m), Op("succ_l", y, m))),
            ddm,
        ),
        _t(
            "rep.I.2",
            Op("prec_l", Op("succ", x, y), bm),
            Op("succ_l", ax, Op("prec_l", y, m)),
            ddm,
        ),
        _t(
            "rep.I.3",
            Op("succ_l", ax, Op("succ_l", y, m)),
            Op("succ_l", S(Op("prec", x, y), Op("succ", x, y)), bm),
            ddm,
        ),
        _t(
            "rep.II.1",
            Op("prec_r", bm, S(Op("prec", x, y), Op("succ", x, y))),
            Op("prec_r", Op("prec_r", m, x), ay),
            mdd,
        ),
        _t(
            "rep.II.2",
            Op("succ_r", bm, Op("prec", x, y)),
            Op("prec_r", Op("succ_r", m, x), ay),
            mdd,
        ),
        _t(
            "rep.II.3",
            Op("succ_r", S(Op("prec_r", m, x), Op("succ_r", m, x)), ay),
            Op("succ_r", bm, Op("succ", x, y)),
            mdd,
        ),
        _t(
            "rep.III.1",
            Op("prec_r", Op("prec_l", x, m), ay),
            Op("prec_l", ax, S(Op("prec_r", m, y), Op("succ_r", m, y))),
            dmd,
        ),
        _t(
            "rep.III.2",
            Op("prec_r", Op("succ_l", x, m), ay),
            Op("succ_l", ax, Op("prec_r", m, y)),
            dmd,
        ),
        _t(
            "rep.III.3",
            Op("succ_r", S(Op("prec_l", x, m), Op("succ_l", x, m)), ay),
            Op("succ_l", ax, Op("succ_r", m, y)),
            dmd,
        ),
    ]


def action_templates() -> list:
    x, y, z = _X, _Y, _Z
    u, v, w = Var("u"), Var("v"), Var("w")
    ax = App("alpha", x)
    dmm = (("x", "D"), ("v", "M"), ("w", "M"))
    mdm = (("u", "M"), ("y", "D"), ("w", "M"))
    mmd = (("u", "M"), ("v", "M"), ("z", "D"))
    am = lambda e: App("alpha_m", e)
    return [
        _t(
            "act.13",
            Op("prec_m", Op("prec_l", x, v), am(w)),
            Op("prec_l", ax, S(Op("prec_m", v, w), Op("succ_m", v, w))),
            dmm,
        ),
        _t(
            "act.14",
            Op("prec_m", Op("succ_l", x, v), am(w)),
            Op("succ_l", ax, Op("prec_m", v, w)),
            dmm,
        ),
        _t(
            "act.15",
            Op("succ_l", ax, Op("succ_m", v, w)),
            Op("succ_m", S(Op("prec_l", x, v), Op("succ_l", x, v)), am(w)),
            dmm,
        ),
        _t(
            "act.16",
            Op("prec_m", Op("prec_r", u, y), am(w)),
            Op("prec_m", am(u), S(Op("prec_l", y, w), Op("succ_l", y, w))),
            mdm,
        ),
        _t(
            "act.17",
            Op("prec_m", Op("succ_r", u, y), am(w)),
            Op("succ_m", am(u), Op("prec_l", y, w)),
            mdm,
        ),
        _t(
            "act.18",
            Op("succ_m", am(u), Op("succ_l", y, w)),
            Op("succ_m", S(Op("prec_r", u, y), Op("succ_r", u, y)), am(w)),
            mdm,
        ),
        _t(
            "act.19",
            Op("prec_r", Op("prec_m", u, v), App("alpha", z)),
            Op("prec_m", am(u), S(Op("prec_r", v, z), Op("succ_r", v, z))),
            mmd,
        ),
        _t(
            "act.20",
            Op("prec_r", Op("succ_m", u, v), App("alpha", z)),
            Op("succ_m", am(u), Op("prec_r", v, z)),
            mmd,
        ),
        _t(
            "act.21",
            Op("succ_r", S(Op("prec_m", u, v), Op("succ_m", u, v)), App("alpha", z)),
            Op("succ_m", am(u), Op("succ_r", v, z)),
            mmd,
        ),
    ]


# ---------------------------------------------------------------------------
# checkers


def _require_kind(bundle: AlgebraBundle, kind: str) -> None:
    if bundle.kind != kind:
        raise ValueError(f"expected a {kind} bundle, got {bundle.kind!r}")


def _run(bundle: AlgebraBundle, templates) -> Report:
    return evaluate_templates(
        templates, {"D": bundle.dim}, dict(bundle.ops), {"alpha": bundle.twist}
    )


def check_dendriform(bundle: AlgebraBundle) -> Report:
    _require_kind(bundle, "dendriform")
    return _run(bundle, dendriform_templates())


def check_associative(bundle: AlgebraBundle) -> Report:
    _require_kind(bundle, "associative")
    return _run(bundle, associative_templates())


def check_diassociative(bundle: AlgebraBundle) -> Report:
    _require_kind(bundle, "diassociative")
    return _run(bundle, diassociative_templates())


def check_quadri(bundle: AlgebraBundle, include_implied: bool = False) -> Report:
    _require_kind(bundle, "quadri_dendriform")
    return _run(bundle, quadri_templates(include_implied=include_implied))


def check_triassociative(bundle: AlgebraBundle) -> Report:
    _require_kind(bundle, "triassociative")
    return _run(bundle, triassociative_templates())


def check_six(
    bundle: AlgebraBundle, sq15: str = "literal", include_implied: bool = False
) -> Report:
    _require_kind(bundle, "six_dendriform")
    return _run(bundle, six_templates(sq15=sq15, include_implied=include_implied))


def check_representation(rep: RepresentationBundle) -> Report:
    _require_kind(rep.base, "dendriform")
    dims = {"D": rep.base.dim, "M": rep.module_dim}
    ops = dict(rep.base.ops)
    ops.update(rep.actions)
    maps = {"alpha": rep.base.twist, "beta": rep.module_twist}
    return evaluate_templates(representation_templates(), dims, ops, maps)


def check_action(action: ActionBundle) -> Report:
    _require_kind(action.acting, "dendriform")
    _require_kind(action.acted, "dendriform")
    rep_report = check_representation(action.representation())
    dims = {"D": action.acting.dim, "M": action.acted.dim}
    ops = dict(action.acting.ops)
    ops.update(action.actions)
    ops["prec_m"] = action.acted.op("prec")
    ops["succ_m"] = action.acted.op("succ")
    maps = {"alpha": action.acting.twist, "alpha_m": action.acted.twist}
    act_report = evaluate_templates(action_templates(), dims, ops, maps)
    return rep_report.merged(act_report)


def check_multiplicative(bundle: AlgebraBundle) -> Report:
    if bundle.kind not in KIND_OPS:
        raise ValueError(f"unknown kind {bundle.kind!r}")
    x, y = _X, _Y
    templates = [
        _t(
            f"mult.{name}",
            App("alpha", Op(name, x, y)),
            Op(name, App("alpha", x), App("alpha", y)),
            (("x", "D"), ("y", "D")),
        )
        for name in sorted(bundle.ops)
    ]
    return _run(bundle, templates)


def check_homomorphism(
    kind: str, linear: LinearMap, source: AlgebraBundle, target: AlgebraBundle
) -> Report:
    """Per-op intertwining T(x op y) = T(x) op' T(y) plus T o alpha = alpha' o T."""
    if kind not in KIND_OPS:
        raise ValueError(f"unknown kind {kind!r}")
    if source.kind != kind or target.kind != kind:
        raise ValueError(f"both bundles must have kind {kind!r}")
    if (linear.dim_in, linear.dim_out) != (source.dim, target.dim):
        raise ValueError("morphism matrix shape does not match the bundles")
    entries = []
    for name in sorted(KIND_OPS[kind]):
        op_a, op_b = source.op(name), target.op(name)
        for i in range(1, source.dim + 1):
            ei = basis_vector(source.dim, i)
            ti = linear.apply(ei)
            for j in range(1, source.dim + 1):
                ej = basis_vector(source.dim, j)
                lhs = linear.apply(op_a.apply(ei, ej))
                rhs = op_b.apply(ti, linear.apply(ej))
                for coord, (a, b) in enumerate(zip(lhs, rhs), start=1):
                    residual = a - b
                    if residual:
                        entries.append(Violation(f"hom.{name}", (i, j, coord), residual))
    lhs_m = linear.compose(source.twist)
    rhs_m = target.twist.compose(linear)
    for r in range(lhs_m.dim_out):
        for c in range(lhs_m.dim_in):
            residual = lhs_m.entries[r][c] - rhs_m.entries[r][c]
            if residual:
                entries.append(Violation("hom.twist", (r + 1, c + 1), residual))
    return Report(entries)


_KIND_CHECKERS = {
    "associative": check_associative,
    "dendriform": check_dendriform,
    "diassociative": check_diassociative,
    "triassociative": check_triassociative,
    "quadri_dendriform": check_quadri,
    "six_dendriform": check_six,
}


def check_kind(bundle: AlgebraBundle, sq15: str = "literal") -> Report:
    """Dispatch to the axiom checker matching the bundle's kind tag."""
    checker = _KIND_CHECKERS.get(bundle.kind)
    if checker is None:
        raise ValueError(f"unknown kind {bundle.kind!r}")
    if bundle.kind == "six_dendriform":
        return checker(bundle, sq15=sq15)
    return checker(bundle)
