"""JSON input/output for algebras, modules and Morita witnesses.

Algebra file (``"format": 1``)::

    {"format": 1, "kind": "algebra", "name": "A", "dim": n,
     "structure_constants": c,        # c[i][j][k]: a_i a_j = sum_k c[i][j][k] a_k
     "unit": [..],                    # optional
     "modules": [{"id": "X", "dim": m,
                  "left_action": l,   # l[i][x][y]: a_i x_x = sum_y l[i][x][y] x_y
                  "right_action": r}],# r[x][i][y]: x_x a_i = sum_y r[x][i][y] x_y
     "metadata": {...}}

Morita witness file: ``"kind": "morita"`` with algebras ``"A"``, ``"B"``
(algebra objects as above, without modules), bimodules ``"P"`` (left
``A``, right ``B``) and ``"Q"`` (left ``B``, right ``A``), and matrices
``"pq"`` (``dim A`` rows, ``dim P·dim Q`` columns, column ``p*dim Q + q``)
and ``"qp"``.

Scalars are exact rationals written as strings ``"p/q"`` or ``"p"``;
integers are accepted, floats are rejected.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .algebra import Algebra, Module
from .category import UNIT, Mor, atom, tensor_obj
from .linalg import Matrix

FORMAT = 1
_RATIONAL = re.compile(r"[+-]?\d+(/\d+)?")


class ParseError(ValueError):
    """Malformed input; ``location`` is a JSON path or ``line N``."""

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location


def _scalar(v, loc: str) -> Fraction:
    if isinstance(v, bool) or isinstance(v, float):
        raise ParseError(loc, f"expected an exact rational, got {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        if not _RATIONAL.fullmatch(v):
            raise ParseError(loc, f"not a rational of the form p or p/q: {v!r}")
        try:
            return Fraction(v)
        except ZeroDivisionError:
            raise ParseError(loc, f"zero denominator: {v!r}") from None
    raise ParseError(loc, f"expected a rational string, got {type(v).__name__}")


def fmt_scalar(x: Fraction) -> str:
    return str(x)


def _field(obj: dict, key: str, loc: str):
    if not isinstance(obj, dict):
        raise ParseError(loc, "expected an object")
    if key not in obj:
        raise ParseError(f"{loc}.{key}", "missing field")
    return obj[key]


def _dim(obj: dict, loc: str) -> int:
    d = _field(obj, "dim", loc)
    if not isinstance(d, int) or isinstance(d, bool) or d < 0:
        raise ParseError(f"{loc}.dim", "expected a non-negative integer")
    return d


def _array3(v, shape: tuple[int, int, int], loc: str) -> list:
    a, b, c = shape
    if not isinstance(v, list) or len(v) != a:
        raise ParseError(loc, f"expected a list of length {a}")
    out = []
    for i, vi in enumerate(v):
        if not isinstance(vi, list) or len(vi) != b:
            raise ParseError(f"{loc}[{i}]", f"expected a list of length {b}")
        row = []
        for j, vij in enumerate(vi):
            if not isinstance(vij, list) or len(vij) != c:
                raise ParseError(f"{loc}[{i}][{j}]", f"expected a list of length {c}")
            row.append([_scalar(x, f"{loc}[{i}][{j}][{k}]") for k, x in enumerate(vij)])
        out.append(row)
    return out


def _matrix(v, rows: int, cols: int, loc: str) -> Matrix:
    if not isinstance(v, list) or len(v) != rows:
        raise ParseError(loc, f"expected {rows} rows")
    data = []
    for i, r in enumerate(v):
        if not isinstance(r, list) or len(r) != cols:
            raise ParseError(f"{loc}[{i}]", f"expected {cols} entries")
        data.append([_scalar(x, f"{loc}[{i}][{j}]") for j, x in enumerate(r)])
    return Matrix(rows, cols, data)


# -- structure constants <-> matrices --------------------------------------------------

def mu_from_constants(c: list, n: int) -> Matrix:
    return Matrix.from_sparse(n, n * n, {(k, i * n + j): c[i][j][k]
                                         for i in range(n) for j in range(n) for k in range(n) if c[i][j][k]})


def constants_from_mu(m: Matrix, n: int) -> list:
    return [[[m[k, i * n + j] for k in range(n)] for j in range(n)] for i in range(n)]


def left_from_constants(c: list, n: int, m: int) -> Matrix:
    return Matrix.from_sparse(m, n * m, {(y, i * m + x): c[i][x][y]
                                         for i in range(n) for x in range(m) for y in range(m) if c[i][x][y]})


def constants_from_left(mat: Matrix, n: int, m: int) -> list:
    return [[[mat[y, i * m + x] for y in range(m)] for x in range(m)] for i in range(n)]


def right_from_constants(c: list, n: int, m: int) -> Matrix:
    return Matrix.from_sparse(m, m * n, {(y, x * n + i): c[x][i][y]
                                         for x in range(m) for i in range(n) for y in range(m) if c[x][i][y]})


def constants_from_right(mat: Matrix, n: int, m: int) -> list:
    return [[[mat[y, x * n + i] for y in range(m)] for i in range(n)] for x in range(m)]


# -- parsing ---------------------------------------------------------------------------

@dataclass
class AlgebraFile:
    algebra: Algebra
    modules: dict = field(default_factory=dict)  # id -> Module (insertion ordered)
    metadata: dict = field(default_factory=dict)


def load_json(text: str, source: str = "<input>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{source}: line {e.lineno} column {e.colno}", e.msg) from None


def _check_format(obj, loc: str) -> None:
    fmt = _field(obj, "format", loc)
    if fmt != FORMAT:
        raise ParseError(f"{loc}.format", f"unsupported format {fmt!r}")


def parse_algebra_obj(obj: dict, loc: str = "$") -> Algebra:
    n = _dim(obj, loc)
    name = obj.get("name", "A")
    if not isinstance(name, str):
        raise ParseError(f"{loc}.name", "expected a string")
    c = _array3(_field(obj, "structure_constants", loc), (n, n, n), f"{loc}.structure_constants")
    A = atom(name, n)
    mu = Mor(tensor_obj(A, A), A, mu_from_constants(c, n))
    unit = None
    if obj.get("unit") is not None:
        u = obj["unit"]
        if not isinstance(u, list) or len(u) != n:
            raise ParseError(f"{loc}.unit", f"expected {n} entries")
        unit = Mor(UNIT, A, Matrix.column([_scalar(x, f"{loc}.unit[{i}]") for i, x in enumerate(u)]))
    return Algebra(A, mu, unit, name=name)


def parse_module_obj(obj: dict, left: Algebra | None, right: Algebra | None, loc: str) -> Module:
    m = _dim(obj, loc)
    mid = obj.get("id", "X")
    if not isinstance(mid, str):
        raise ParseError(f"{loc}.id", "expected a string")
    X = atom(mid, m)
    act_l = act_r = None
    la = ra = None
    if obj.get("left_action") is not None:
        if left is None:
            raise ParseError(f"{loc}.left_action", "no algebra acts from the left")
        n = left.dim
        c = _array3(obj["left_action"], (n, m, m), f"{loc}.left_action")
        act_l = Mor(tensor_obj(left.carrier, X), X, left_from_constants(c, n, m))
        la = left
    if obj.get("right_action") is not None:
        if right is None:
            raise ParseError(f"{loc}.right_action", "no algebra acts from the right")
        n = right.dim
        c = _array3(obj["right_action"], (m, n, m), f"{loc}.right_action")
        act_r = Mor(tensor_obj(X, right.carrier), X, right_from_constants(c, n, m))
        ra = right
    return Module(X, la, act_l, ra, act_r, name=mid)


def parse_algebra_file(obj, source: str = "$") -> AlgebraFile:
    _check_format(obj, source)
    alg = parse_algebra_obj(obj, source)
    mods = {}
    ml = obj.get("modules", [])
    if not isinstance(ml, list):
        raise ParseError(f"{source}.modules", "expected a list")
    for i, mo in enumerate(ml):
        mod = parse_module_obj(mo, alg, alg, f"{source}.modules[{i}]")
        if mod.name in mods:
            raise ParseError(f"{source}.modules[{i}].id", f"duplicate module id {mod.name!r}")
        mods[mod.name] = mod
    meta = obj.get("metadata", {})
    return AlgebraFile(alg, mods, meta if isinstance(meta, dict) else {})


def read_file(path: str | Path):
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as e:
        raise ParseError(str(p), e.strerror or "cannot read file") from None
    return load_json(text, str(p))


# -- emitting ----------------------------------------------------------------------------

def _fmt3(c: list) -> list:
    return [[[fmt_scalar(x) for x in r] for r in row] for row in c]


def algebra_obj(a: Algebra) -> dict:
    n = a.dim
    obj = {"format": FORMAT, "kind": "algebra", "name": a.name or "A", "dim": n,
           "structure_constants": _fmt3(constants_from_mu(a.mu.mat, n))}
    if a.unit is not None:
        obj["unit"] = [fmt_scalar(a.unit.mat[i, 0]) for i in range(n)]
    return obj


def module_obj(m: Module, mid: str | None = None) -> dict:
    obj = {"id": mid or m.name or "X", "dim": m.dim}
    if m.left is not None:
        obj["left_action"] = _fmt3(constants_from_left(m.act_left.mat, m.left.dim, m.dim))
    if m.right is not None:
        obj["right_action"] = _fmt3(constants_from_right(m.act_right.mat, m.right.dim, m.dim))
    return obj


def algebra_file_obj(a: Algebra, modules: dict | None = None, metadata: dict | None = None) -> dict:
    obj = algebra_obj(a)
    if modules:
        obj["modules"] = [module_obj(m, mid) for mid, m in modules.items()]
    if metadata:
        obj["metadata"] = metadata
    return obj


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# -- Morita witness files -------------------------------------------------------------------

def parse_morita_file(obj, source: str = "$"):
    from .morita import MoritaWitness

    _check_format(obj, source)
    a = parse_algebra_obj(_field(obj, "A", source), f"{source}.A")
    b = parse_algebra_obj(_field(obj, "B", source), f"{source}.B")
    if a.carrier == b.carrier:
        raise ParseError(f"{source}.B.name", "the two algebras need distinct names")
    P = parse_module_obj(_field(obj, "P", source), a, b, f"{source}.P")
    Q = parse_module_obj(_field(obj, "Q", source), b, a, f"{source}.Q")
    if P.left is None or P.right is None:
        raise ParseError(f"{source}.P", "P needs both a left and a right action")
    if Q.left is None or Q.right is None:
        raise ParseError(f"{source}.Q", "Q needs both a left and a right action")
    pq = Mor(tensor_obj(P.carrier, Q.carrier), a.carrier,
             _matrix(_field(obj, "pq", source), a.dim, P.dim * Q.dim, f"{source}.pq"))
    qp = Mor(tensor_obj(Q.carrier, P.carrier), b.carrier,
             _matrix(_field(obj, "qp", source), b.dim, Q.dim * P.dim, f"{source}.qp"))
    samples = {}
    for key, alg in (("smooth_a", a), ("smooth_b", b), ("rough_a", a), ("rough_b", b)):
        lst = obj.get("samples", {}).get(key, [])
        samples[key] = [parse_module_obj(mo, alg, None, f"{source}.samples.{key}[{i}]")
                        for i, mo in enumerate(lst)]
    w = MoritaWitness(a, b, P, Q, pq, qp, name=obj.get("name", "witness"))
    return w, samples


def morita_file_obj(w, samples: dict | None = None) -> dict:
    def mat(m: Matrix) -> list:
        return [[fmt_scalar(x) for x in r] for r in m.tolist()]

    obj = {"format": FORMAT, "kind": "morita", "name": w.name,
           "A": algebra_obj(w.alg_a), "B": algebra_obj(w.alg_b),
           "P": module_obj(w.P), "Q": module_obj(w.Q),
           "pq": mat(w.pq.mat), "qp": mat(w.qp.mat)}
    for o in (obj["A"], obj["B"]):
        o.pop("format"), o.pop("kind")
    if samples:
        obj["samples"] = {k: [module_obj(m) for m in v] for k, v in samples.items() if v}
    return obj
