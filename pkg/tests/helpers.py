"""Shared builders and seeded random generators for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from homsplit.axioms import check_associative, check_dendriform
from homsplit.model import AlgebraBundle, BilinearOp, LinearMap, RepresentationBundle
from homsplit.poly import Polynomial

P = Polynomial.parse

COEFFS = [
    Fraction(1), Fraction(-1), Fraction(2), Fraction(-2),
    Fraction(1, 2), Fraction(-1, 2),
]


def bundle(kind, dim, params, alpha_rows, **ops) -> AlgebraBundle:
    return AlgebraBundle(
        kind=kind,
        dim=dim,
        ops={
            name: BilinearOp.square(
                dim, [(i, j, k, P(c) if isinstance(c, str) else Polynomial.constant(c))
                      for (i, j, k, c) in entries]
            )
            for name, entries in ops.items()
        },
        twist=LinearMap.from_strings(alpha_rows),
        parameters=tuple(sorted(params)),
    )


def zero_bundle(kind, dim, op_names, alpha=None) -> AlgebraBundle:
    return AlgebraBundle(
        kind=kind,
        dim=dim,
        ops={name: BilinearOp.zero_square(dim) for name in op_names},
        twist=alpha if alpha is not None else LinearMap.identity(dim),
        parameters=(),
    )


def deta() -> AlgebraBundle:
    """The worked dimension-3 dendriform example, symbolic in eta and b."""
    return bundle(
        "dendriform", 3, ["b", "eta"],
        [["0", "1", "0"], ["0", "0", "0"], ["0", "0", "b"]],
        prec=[(1, 2, 3, "eta"), (2, 2, 3, "-1/2"), (3, 2, 3, "1")],
        succ=[(2, 1, 3, "1"), (2, 2, 1, "1"), (2, 2, 3, "1/4"),
              (3, 2, 1, "eta"), (3, 2, 3, "1")],
    )


def rich_dendriform() -> AlgebraBundle:
    """Depth-3 dendriform instance with identity twist; unlike the corpus
    tables it is rigid enough to witness violations of reinterpretations
    (e1 prec (e1 prec e1) = e4 while e1 succ (e1 prec e1) = 0)."""
    return bundle(
        "dendriform", 4, [],
        [["1", "0", "0", "0"], ["0", "1", "0", "0"],
         ["0", "0", "1", "0"], ["0", "0", "0", "1"]],
        prec=[(1, 1, 2, "1"), (1, 2, 4, "1"), (2, 1, 4, "1")],
        succ=[(1, 1, 3, "1")],
    )


def sec2_diassociative() -> AlgebraBundle:
    return bundle(
        "diassociative", 3, ["a"],
        [["a", "1", "0"], ["0", "a", "0"], ["0", "0", "1"]],
        dashv=[(1, 2, 3, "-2"), (2, 1, 3, "1"), (2, 2, 3, "1")],
        vdash=[(1, 1, 3, "1/4"), (1, 2, 3, "1"), (2, 2, 3, "1")],
    )


def rand_fraction(rng: random.Random) -> Fraction:
    return rng.choice(COEFFS)


def rand_matrix(rng: random.Random, dim_out: int, dim_in: int, values=None) -> LinearMap:
    values = values if values is not None else [Fraction(0), Fraction(1), Fraction(-1)]
    return LinearMap.from_fractions(
        [[rng.choice(values) for _ in range(dim_in)] for _ in range(dim_out)]
    )


def _rand_sparse_op(rng: random.Random, dim: int, max_entries: int) -> BilinearOp:
    entries = []
    for _ in range(rng.randrange(max_entries + 1)):
        entries.append(
            (
                rng.randrange(1, dim + 1),
                rng.randrange(1, dim + 1),
                rng.randrange(1, dim + 1),
                Polynomial.constant(rand_fraction(rng)),
            )
        )
    return BilinearOp.square(dim, entries)


def random_dendriform_candidate(rng: random.Random, dim: int = 2) -> AlgebraBundle:
    """Random sparse dendriform candidate; caller filters with the checker."""
    alpha = rand_matrix(rng, dim, dim)
    return AlgebraBundle(
        kind="dendriform",
        dim=dim,
        ops={
            "prec": _rand_sparse_op(rng, dim, 2),
            "succ": _rand_sparse_op(rng, dim, 2),
        },
        twist=alpha,
        parameters=(),
    )


def dendriform_pool(rng: random.Random, count: int, dim: int = 2, max_attempts: int = 20000):
    """Valid dendriform instances: randomize structure constants, filter."""
    pool = []
    attempts = 0
    while len(pool) < count and attempts < max_attempts:
        attempts += 1
        candidate = random_dendriform_candidate(rng, dim)
        if check_dendriform(candidate).ok:
            pool.append(candidate)
    return pool


def random_associative_candidate(rng: random.Random, dim: int = 2) -> AlgebraBundle:
    return AlgebraBundle(
        kind="associative",
        dim=dim,
        ops={"mu": _rand_sparse_op(rng, dim, 2)},
        twist=rand_matrix(rng, dim, dim),
        parameters=(),
    )


def associative_pool(rng: random.Random, count: int, dim: int = 2, max_attempts: int = 20000):
    pool = []
    attempts = 0
    while len(pool) < count and attempts < max_attempts:
        attempts += 1
        candidate = random_associative_candidate(rng, dim)
        if check_associative(candidate).ok:
            pool.append(candidate)
    return pool


def flip_one_constant(rng: random.Random, algebra: AlgebraBundle) -> AlgebraBundle:
    """Flip the sign of one randomly chosen nonzero structure constant."""
    flat = [
        (name, key)
        for name, op in sorted(algebra.ops.items())
        for key, _ in op.constants
    ]
    name, key = rng.choice(flat)
    ops = {}
    for op_name, op in algebra.ops.items():
        entries = [
            (i, j, k, -c if (op_name == name and (i, j, k) == key) else c)
            for (i, j, k), c in op.constants
        ]
        ops[op_name] = BilinearOp.from_entries(op.dim_left, op.dim_right, op.dim_out, entries)
    return AlgebraBundle(algebra.kind, algebra.dim, ops, algebra.twist, algebra.parameters)


def adjoint(algebra: AlgebraBundle) -> RepresentationBundle:
    return RepresentationBundle.adjoint(algebra)
