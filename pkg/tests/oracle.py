"""Independent brute-force oracle for the axiom checkers.

Transcribes the defining identities directly as coordinate computations with
its own tiny evaluator; shares no evaluation code with homsplit.axioms.
Runs over exact Fractions for parameter-free bundles and over sympy
expressions for symbolic ones (sympy is a fully independent arithmetic
engine, so engine/oracle agreement checks two disjoint code paths).
"""

from __future__ import annotations

import sympy as sp


def _fraction_scalar(poly):
    return poly.as_fraction()


def _fraction_is_zero(s) -> bool:
    return s == 0


def make_sympy_scalar(names):
    symbols = {n: sp.Symbol(n) for n in names}

    def conv(poly):
        return sp.sympify(str(poly).replace("^", "**"), locals=dict(symbols))

    return conv


def _sympy_is_zero(s) -> bool:
    return sp.expand(s) == 0


def scalar_tools(bundle, mode: str):
    if mode == "fraction":
        return _fraction_scalar, _fraction_is_zero
    names = sorted(set(bundle.parameters) | bundle.used_parameters())
    return make_sympy_scalar(names), _sympy_is_zero


def _table(op, conv) -> dict:
    return {key: conv(c) for key, c in op.constants}


def _matrix(linear, conv) -> list:
    return [[conv(cell) for cell in row] for row in linear.entries]


def _apply(table: dict, x, y, nout: int):
    out = [0] * nout
    for (i, j, k), c in table.items():
        out[k - 1] = out[k - 1] + x[i - 1] * y[j - 1] * c
    return out


def _map(rows: list, x):
    return [sum(row[c] * x[c] for c in range(len(x))) for row in rows]


def _add(a, b):
    return [p + q for p, q in zip(a, b)]


def _basis(n: int) -> list:
    return [[1 if c == r else 0 for c in range(n)] for r in range(n)]


def _violations(chains, n: int, is_zero) -> set:
    """chains: list of (label, fn) with fn(x, y, z) -> list of expression
    lists; consecutive-to-first pairs are compared (.a, .b suffixes)."""
    found = set()
    basis = _basis(n)
    for label, fn in chains:
        for i, x in enumerate(basis, start=1):
            for j, y in enumerate(basis, start=1):
                for k, z in enumerate(basis, start=1):
                    exprs = fn(x, y, z)
                    first = exprs[0]
                    suffixes = [""] if len(exprs) == 2 else [".a", ".b"]
                    for suffix, other in zip(suffixes, exprs[1:]):
                        for coord in range(n):
                            if not is_zero(first[coord] - other[coord]):
                                found.add((label + suffix, (i, j, k, coord + 1)))
    return found


def dendriform_violations(bundle, mode: str = "fraction", prefix: str = "dend") -> set:
    conv, is_zero = scalar_tools(bundle, mode)
    n = bundle.dim
    p = _table(bundle.op("prec"), conv)
    s = _table(bundle.op("succ"), conv)
    al = _matrix(bundle.twist, conv)
    P = lambda x, y: _apply(p, x, y, n)
    S = lambda x, y: _apply(s, x, y, n)
    A = lambda x: _map(al, x)
    chains = [
        (f"{prefix}.1", lambda x, y, z: [P(A(x), _add(P(y, z), S(y, z))), P(P(x, y), A(z))]),
        (f"{prefix}.2", lambda x, y, z: [S(A(x), P(y, z)), P(S(x, y), A(z))]),
        (f"{prefix}.3", lambda x, y, z: [S(A(x), S(y, z)), S(_add(P(x, y), S(x, y)), A(z))]),
    ]
    return _violations(chains, n, is_zero)


def diassociative_violations(bundle, mode: str = "fraction") -> set:
    conv, is_zero = scalar_tools(bundle, mode)
    n = bundle.dim
    d = _table(bundle.op("dashv"), conv)
    v = _table(bundle.op("vdash"), conv)
    al = _matrix(bundle.twist, conv)
    D = lambda x, y: _apply(d, x, y, n)
    V = lambda x, y: _apply(v, x, y, n)
    A = lambda x: _map(al, x)
    chains = [
        ("dias.4", lambda x, y, z: [D(D(x, y), A(z)), D(A(x), D(y, z))]),
        ("dias.5", lambda x, y, z: [D(D(x, y), A(z)), D(A(x), V(y, z))]),
        ("dias.6", lambda x, y, z: [D(V(x, y), A(z)), V(A(x), D(y, z))]),
        ("dias.7", lambda x, y, z: [V(D(x, y), A(z)), V(A(x), V(y, z))]),
        ("dias.8", lambda x, y, z: [V(V(x, y), A(z)), V(A(x), V(y, z))]),
    ]
    return _violations(chains, n, is_zero)


def quadri_violations(bundle, mode: str = "fraction") -> set:
    conv, is_zero = scalar_tools(bundle, mode)
    n = bundle.dim
    pv = _table(bundle.op("prec_vdash"), conv)
    pd = _table(bundle.op("prec_dashv"), conv)
    sv = _table(bundle.op("succ_vdash"), conv)
    sd = _table(bundle.op("succ_dashv"), conv)
    al = _matrix(bundle.twist, conv)
    PV = lambda x, y: _apply(pv, x, y, n)
    PD = lambda x, y: _apply(pd, x, y, n)
    SV = lambda x, y: _apply(sv, x, y, n)
    SD = lambda x, y: _apply(sd, x, y, n)
    A = lambda x: _map(al, x)
    chains = [
        ("quadri.Hq1", lambda x, y, z: [
            PV(PV(x, y), A(z)), PV(PD(x, y), A(z)),
            PV(A(x), _add(PV(y, z), SV(y, z)))]),
        ("quadri.Hq2", lambda x, y, z: [
            PV(SV(x, y), A(z)), PV(SD(x, y), A(z)), SV(A(x), PV(y, z))]),
        ("quadri.Hq3", lambda x, y, z: [
            SV(A(x), SV(y, z)),
            SV(_add(PV(x, y), SV(x, y)), A(z)),
            SV(_add(PD(x, y), SD(x, y)), A(z))]),
        ("quadri.Hq4", lambda x, y, z: [
            SV(A(x), SV(y, z)),
            SV(_add(PD(x, y), SV(x, y)), A(z)),
            SV(_add(PV(x, y), SD(x, y)), A(z))]),
        ("quadri.Hq5", lambda x, y, z: [
            PD(PV(x, y), A(z)), PV(A(x), _add(PD(y, z), SD(y, z)))]),
        ("quadri.Hq6", lambda x, y, z: [
            PD(SV(x, y), A(z)), SV(A(x), PD(y, z))]),
        ("quadri.Hq7", lambda x, y, z: [
            SV(A(x), SD(y, z)), SD(_add(PV(x, y), SV(x, y)), A(z))]),
        ("quadri.Hq8", lambda x, y, z: [
            PD(PD(x, y), A(z)),
            PD(A(x), _add(PV(y, z), SV(y, z))),
            PD(A(x), _add(PD(y, z), SD(y, z)))]),
        ("quadri.Hq9", lambda x, y, z: [
            PD(PD(x, y), A(z)),
            PD(A(x), _add(PV(y, z), SD(y, z))),
            PD(A(x), _add(PD(y, z), SV(y, z)))]),
        ("quadri.Hq10", lambda x, y, z: [
            PD(SD(x, y), A(z)), SD(A(x), PV(y, z)), SD(A(x), PD(y, z))]),
        ("quadri.Hq11", lambda x, y, z: [
            SD(A(x), SV(y, z)), SD(A(x), SD(y, z)),
            SD(_add(PD(x, y), SD(x, y)), A(z))]),
    ]
    return _violations(chains, n, is_zero)


def multiplicative_violations(bundle, mode: str = "fraction") -> set:
    conv, is_zero = scalar_tools(bundle, mode)
    n = bundle.dim
    al = _matrix(bundle.twist, conv)
    found = set()
    basis = _basis(n)
    for name in sorted(bundle.ops):
        table = _table(bundle.op(name), conv)
        for i, x in enumerate(basis, start=1):
            for j, y in enumerate(basis, start=1):
                lhs = _map(al, _apply(table, x, y, n))
                rhs = _apply(table, _map(al, x), _map(al, y), n)
                for coord in range(n):
                    if not is_zero(lhs[coord] - rhs[coord]):
                        found.add((f"mult.{name}", (i, j, coord + 1)))
    return found


def engine_violation_set(report) -> set:
    return {(v.template, v.witness) for v in report.entries}
