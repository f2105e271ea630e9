"""JSON file formats for algebras, representations, actions, and operators.

Algebra file:

    { "kind": "...", "dimension": n, "parameters": ["a", ...],
      "alpha": [[polystring, ...], ...],            row-major n x n
      "ops": { "<opname>": [ {"i":1,"j":2,"k":3,"c":"<polystring>"}, ... ] } }

Representation files add "module_dimension", "beta", and "actions" (the four
tensors prec_l/succ_l/prec_r/succ_r); action files additionally carry
"acted_ops" ({"prec": ..., "succ": ...} on the module space, twist = beta).
Operator files are {"kind": "...", "matrix": [[polystring, ...], ...]}.

Duplicate (i,j,k) keys are an input error.  Files written by `construct`
carry a leading "// ..." provenance comment line; the readers skip such
lines before JSON parsing.
"""

from __future__ import annotations

import json
from pathlib import Path

from .model import (
    ACTION_NAMES,
    ActionBundle,
    AlgebraBundle,
    BilinearOp,
    LinearMap,
    ModelError,
    RepresentationBundle,
)
from .poly import ParseError, Polynomial

ALGEBRA_KEYS = {"kind", "dimension", "parameters", "alpha", "ops"}
REPRESENTATION_KEYS = ALGEBRA_KEYS | {"module_dimension", "beta", "actions"}
ACTION_KEYS = REPRESENTATION_KEYS | {"acted_ops"}
OPERATOR_KEYS = {"kind", "matrix"}

OPERATOR_KINDS = {
    "averaging_assoc",
    "rota_baxter",
    "relative_averaging",
    "homomorphic_relative_averaging",
    "averaging_quadri",
}


def _parse_poly(text, where: str) -> Polynomial:
    if not isinstance(text, str):
        raise ModelError(f"{where}: polynomial entry must be a string")
    try:
        return Polynomial.parse(text)
    except ParseError as exc:
        raise ModelError(f"{where}: {exc}") from exc


def _matrix_from_json(data, where: str) -> LinearMap:
    if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
        raise ModelError(f"{where}: expected a non-empty list of rows")
    width = len(data[0])
    if any(len(r) != width for r in data):
        raise ModelError(f"{where}: ragged matrix rows")
    rows = [
        [_parse_poly(cell, f"{where}[{i + 1}][{j + 1}]") for j, cell in enumerate(row)]
        for i, row in enumerate(data)
    ]
    return LinearMap.from_rows(rows)


def _matrix_to_json(m: LinearMap) -> list:
    return [[str(cell) for cell in row] for row in m.entries]


def _tensor_from_json(data, dims: tuple, where: str) -> BilinearOp:
    if not isinstance(data, list):
        raise ModelError(f"{where}: expected a list of entries")
    seen = set()
    entries = []
    for pos, item in enumerate(data):
        if not isinstance(item, dict) or set(item) != {"i", "j", "k", "c"}:
            raise ModelError(f"{where}[{pos}]: entry must have exactly keys i, j, k, c")
        i, j, k = item["i"], item["j"], item["k"]
        if not all(isinstance(v, int) for v in (i, j, k)):
            raise ModelError(f"{where}[{pos}]: indices must be integers")
        key = (i, j, k)
        if key in seen:
            raise ModelError(f"{where}: duplicate tensor key {key}")
        seen.add(key)
        entries.append((i, j, k, _parse_poly(item["c"], f"{where}[{pos}].c")))
    return BilinearOp.from_entries(dims[0], dims[1], dims[2], entries)


def _tensor_to_json(op: BilinearOp) -> list:
    return [
        {"i": i, "j": j, "k": k, "c": str(c)} for (i, j, k), c in op.constants
    ]


def _check_keys(data: dict, allowed: set, required: set, what: str) -> None:
    if not isinstance(data, dict):
        raise ModelError(f"{what}: expected a JSON object")
    extra = set(data) - allowed
    if extra:
        raise ModelError(f"{what}: unexpected key(s) {sorted(extra)}")
    missing = required - set(data)
    if missing:
        raise ModelError(f"{what}: missing key(s) {sorted(missing)}")


def algebra_from_dict(data: dict) -> AlgebraBundle:
    _check_keys(data, ALGEBRA_KEYS, ALGEBRA_KEYS, "algebra file")
    dim = data["dimension"]
    if not isinstance(dim, int) or dim < 1:
        raise ModelError("algebra file: dimension must be a positive integer")
    params = data["parameters"]
    if not isinstance(params, list) or not all(isinstance(p, str) for p in params):
        raise ModelError("algebra file: parameters must be a list of strings")
    ops_data = data["ops"]
    if not isinstance(ops_data, dict):
        raise ModelError("algebra file: ops must be an object")
    ops = {
        name: _tensor_from_json(entries, (dim, dim, dim), f"ops.{name}")
        for name, entries in ops_data.items()
    }
    return AlgebraBundle(
        kind=data["kind"],
        dim=dim,
        ops=ops,
        twist=_matrix_from_json(data["alpha"], "alpha"),
        parameters=tuple(sorted(set(params))),
    )


def algebra_to_dict(bundle: AlgebraBundle) -> dict:
    return {
        "kind": bundle.kind,
        "dimension": bundle.dim,
        "parameters": sorted(bundle.parameters),
        "alpha": _matrix_to_json(bundle.twist),
        "ops": {name: _tensor_to_json(op) for name, op in sorted(bundle.ops.items())},
    }


def representation_from_dict(data: dict) -> RepresentationBundle:
    _check_keys(data, REPRESENTATION_KEYS, REPRESENTATION_KEYS, "representation file")
    base = algebra_from_dict({k: data[k] for k in ALGEBRA_KEYS})
    return _representation_parts(data, base)


def _representation_parts(data: dict, base: AlgebraBundle) -> RepresentationBundle:
    mdim = data["module_dimension"]
    if not isinstance(mdim, int) or mdim < 1:
        raise ModelError("representation file: module_dimension must be positive")
    shapes = {
        "prec_l": (base.dim, mdim, mdim),
        "succ_l": (base.dim, mdim, mdim),
        "prec_r": (mdim, base.dim, mdim),
        "succ_r": (mdim, base.dim, mdim),
    }
    actions_data = data["actions"]
    if not isinstance(actions_data, dict) or set(actions_data) != set(ACTION_NAMES):
        raise ModelError(
            f"representation file: actions must have exactly keys {sorted(ACTION_NAMES)}"
        )
    actions = {
        name: _tensor_from_json(actions_data[name], shapes[name], f"actions.{name}")
        for name in ACTION_NAMES
    }
    return RepresentationBundle(
        base=base,
        module_dim=mdim,
        actions=actions,
        module_twist=_matrix_from_json(data["beta"], "beta"),
    )


def representation_to_dict(rep: RepresentationBundle) -> dict:
    out = algebra_to_dict(rep.base)
    out["module_dimension"] = rep.module_dim
    out["beta"] = _matrix_to_json(rep.module_twist)
    out["actions"] = {name: _tensor_to_json(rep.actions[name]) for name in ACTION_NAMES}
    return out


def action_from_dict(data: dict) -> ActionBundle:
    _check_keys(data, ACTION_KEYS, ACTION_KEYS, "action file")
    rep = _representation_parts(
        data, algebra_from_dict({k: data[k] for k in ALGEBRA_KEYS})
    )
    acted_data = data["acted_ops"]
    if not isinstance(acted_data, dict) or set(acted_data) != {"prec", "succ"}:
        raise ModelError("action file: acted_ops must have exactly keys prec, succ")
    m = rep.module_dim
    acted = AlgebraBundle(
        kind="dendriform",
        dim=m,
        ops={
            name: _tensor_from_json(acted_data[name], (m, m, m), f"acted_ops.{name}")
            for name in ("prec", "succ")
        },
        twist=rep.module_twist,
        parameters=tuple(sorted(rep.base.parameters)),
    )
    return ActionBundle(acting=rep.base, acted=acted, actions=rep.actions)


def action_to_dict(action: ActionBundle) -> dict:
    out = representation_to_dict(action.representation())
    out["acted_ops"] = {
        "prec": _tensor_to_json(action.acted.op("prec")),
        "succ": _tensor_to_json(action.acted.op("succ")),
    }
    return out


def operator_from_dict(data: dict) -> tuple:
    _check_keys(data, OPERATOR_KEYS, OPERATOR_KEYS, "operator file")
    kind = data["kind"]
    if kind not in OPERATOR_KINDS:
        raise ModelError(
            f"operator file: unknown kind {kind!r} (expected one of {sorted(OPERATOR_KINDS)})"
        )
    return kind, _matrix_from_json(data["matrix"], "matrix")


def operator_to_dict(kind: str, matrix: LinearMap) -> dict:
    return {"kind": kind, "matrix": _matrix_to_json(matrix)}


# ---------------------------------------------------------------------------
# path-level helpers


def read_json(path) -> dict:
    """Read a JSON file, skipping leading '//' provenance comment lines."""
    text = Path(path).read_text(encoding="utf-8")
    lines = text.splitlines()
    start = 0
    while start < len(lines) and lines[start].lstrip().startswith("//"):
        start += 1
    body = "\n".join(lines[start:])
    try:
        return json.loads(body)
    except json.JSONDecodeError as exc:
        raise ModelError(f"{path}: invalid JSON ({exc})") from exc


def write_json(path, data: dict, header: str | None = None) -> None:
    body = json.dumps(data, indent=2, sort_keys=True) + "\n"
    if header:
        body = f"// {header}\n" + body
    Path(path).write_text(body, encoding="utf-8")


def classify_file(data: dict) -> str:
    """'algebra', 'representation', 'action', or 'operator'."""
    if not isinstance(data, dict):
        raise ModelError("expected a JSON object")
    if "matrix" in data:
        return "operator"
    if "acted_ops" in data:
        return "action"
    if "module_dimension" in data:
        return "representation"
    return "algebra"
