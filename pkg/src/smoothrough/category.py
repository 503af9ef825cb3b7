"""Finite-dimensional rational vector spaces as a closed symmetric monoidal category.

Flattening conventions (fixed here, used everywhere):

* ``A ⊗ B``: basis vector ``e_i ⊗ f_j`` sits at index ``i * dim(B) + j``.
  Every bracketing of an iterated tensor product therefore has the same
  index layout, so associators and unitors are identity matrices between
  differently tagged objects.
* ``Hom(A, B)``: basis vector ``u_(i, j)`` is the map ``e_i -> f_j`` and
  sits at index ``i * dim(B) + j``.  For a matrix ``M`` (rows indexed by
  ``B``) this is column-major flattening.

Objects compare by structural tag, not by dimension: composing across two
distinct but equidimensional objects is a :class:`TypeMismatch`.
"""

from __future__ import annotations

import hashlib
from functools import cached_property

from .linalg import ONE, Matrix, is_invertible, inverse

__all__ = [
    "Obj", "Mor", "TypeMismatch", "UNIT",
    "atom", "tensor_obj", "hom_obj", "sum_obj", "ker_obj", "coker_obj",
    "identity", "zero_mor", "tensor_mor", "associator", "associator_inv",
    "left_unitor", "left_unitor_inv", "right_unitor", "right_unitor_inv", "braiding",
    "curry", "uncurry", "evaluation", "hom_lift", "composition_map", "inflation_map",
    "precompose_map", "postcompose_map", "element", "from_element", "point",
    "injection", "projection",
]


class TypeMismatch(TypeError):
    """Morphisms were combined across objects with different tags."""


def _digest(*parts: str) -> str:
    return hashlib.sha256("|".join(parts).encode()).hexdigest()[:20]


class Obj:
    __slots__ = ("kind", "parts", "dim", "name", "key")

    def __init__(self, kind: str, parts: tuple, dim: int, name: str, key: str):
        self.kind, self.parts, self.dim, self.name, self.key = kind, parts, dim, name, key

    def __eq__(self, other) -> bool:
        return isinstance(other, Obj) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"Obj({self}, dim={self.dim})"

    def __str__(self) -> str:
        if self.kind in ("atom", "unit", "ker", "coker"):
            return self.name
        a, b = self.parts
        op = {"tensor": "⊗", "hom": "→", "sum": "⊕"}[self.kind]
        if self.kind == "hom":
            return f"[{a}, {b}]"
        return f"({a}{op}{b})"


def atom(name: str, dim: int) -> Obj:
    if dim < 0:
        raise ValueError("dimension must be non-negative")
    return Obj("atom", (), dim, name, _digest("atom", name, str(dim)))


UNIT = Obj("unit", (), 1, "𝟙", _digest("unit"))


def tensor_obj(a: Obj, b: Obj) -> Obj:
    return Obj("tensor", (a, b), a.dim * b.dim, "", _digest("tensor", a.key, b.key))


def hom_obj(a: Obj, b: Obj) -> Obj:
    return Obj("hom", (a, b), a.dim * b.dim, "", _digest("hom", a.key, b.key))


def sum_obj(a: Obj, b: Obj) -> Obj:
    return Obj("sum", (a, b), a.dim + b.dim, "", _digest("sum", a.key, b.key))


def ker_obj(f: "Mor", dim: int, name: str = "") -> Obj:
    return Obj("ker", (f,), dim, name or f"ker#{f.key[:6]}", _digest("ker", f.key, str(dim)))


def coker_obj(f: "Mor", dim: int, name: str = "") -> Obj:
    return Obj("coker", (f,), dim, name or f"coker#{f.key[:6]}", _digest("coker", f.key, str(dim)))


class Mor:
    """A typed linear map; ``mat`` has ``dim(cod)`` rows and ``dim(dom)`` columns."""

    __slots__ = ("dom", "cod", "mat", "__dict__")

    def __init__(self, dom: Obj, cod: Obj, mat: Matrix):
        if mat.shape != (cod.dim, dom.dim):
            raise ValueError(f"matrix shape {mat.shape} does not fit {dom} -> {cod}")
        self.dom, self.cod, self.mat = dom, cod, mat

    @cached_property
    def key(self) -> str:
        return _digest("mor", self.dom.key, self.cod.key, self.mat.digest)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mor):
            return NotImplemented
        return self.dom == other.dom and self.cod == other.cod and self.mat == other.mat

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"Mor({self.dom} -> {self.cod}, {self.mat!r})"

    def __matmul__(self, other: "Mor") -> "Mor":
        """Composition ``self ∘ other``."""
        if other.cod != self.dom:
            raise TypeMismatch(f"cannot compose {other.dom} -> {other.cod} with {self.dom} -> {self.cod}")
        return Mor(other.dom, self.cod, self.mat @ other.mat)

    def _same_type(self, other: "Mor") -> None:
        if self.dom != other.dom or self.cod != other.cod:
            raise TypeMismatch(f"{self.dom} -> {self.cod} vs {other.dom} -> {other.cod}")

    def __add__(self, other: "Mor") -> "Mor":
        self._same_type(other)
        return Mor(self.dom, self.cod, self.mat + other.mat)

    def __sub__(self, other: "Mor") -> "Mor":
        self._same_type(other)
        return Mor(self.dom, self.cod, self.mat - other.mat)

    def __neg__(self) -> "Mor":
        return Mor(self.dom, self.cod, -self.mat)

    def scale(self, c) -> "Mor":
        return Mor(self.dom, self.cod, self.mat.scale(c))

    def is_zero(self) -> bool:
        return self.mat.is_zero()

    def is_iso(self) -> bool:
        return is_invertible(self.mat)

    def inverse(self) -> "Mor":
        return Mor(self.cod, self.dom, inverse(self.mat))

    def retag(self, dom: Obj | None = None, cod: Obj | None = None) -> "Mor":
        """Same matrix, new boundary tags.  Only for structural identifications."""
        return Mor(dom or self.dom, cod or self.cod, self.mat)


def identity(x: Obj) -> Mor:
    return Mor(x, x, Matrix.identity(x.dim))


def zero_mor(x: Obj, y: Obj) -> Mor:
    return Mor(x, y, Matrix.zeros(y.dim, x.dim))


def _structural(dom: Obj, cod: Obj) -> Mor:
    if dom.dim != cod.dim:
        raise TypeMismatch(f"structural iso between dims {dom.dim} and {cod.dim}")
    return Mor(dom, cod, Matrix.identity(dom.dim))


def _parts(x: Obj, kind: str) -> tuple[Obj, Obj]:
    if x.kind != kind:
        raise TypeMismatch(f"expected a {kind} object, got {x}")
    return x.parts


# -- monoidal structure -------------------------------------------------------

def tensor_mor(f: Mor, g: Mor) -> Mor:
    return Mor(tensor_obj(f.dom, g.dom), tensor_obj(f.cod, g.cod), f.mat.kron(g.mat))


def associator(a: Obj, b: Obj, c: Obj) -> Mor:
    """``(A⊗B)⊗C -> A⊗(B⊗C)``."""
    return _structural(tensor_obj(tensor_obj(a, b), c), tensor_obj(a, tensor_obj(b, c)))


def associator_inv(a: Obj, b: Obj, c: Obj) -> Mor:
    return _structural(tensor_obj(a, tensor_obj(b, c)), tensor_obj(tensor_obj(a, b), c))


def left_unitor(a: Obj) -> Mor:
    return _structural(tensor_obj(UNIT, a), a)


def left_unitor_inv(a: Obj) -> Mor:
    return _structural(a, tensor_obj(UNIT, a))


def right_unitor(a: Obj) -> Mor:
    return _structural(tensor_obj(a, UNIT), a)


def right_unitor_inv(a: Obj) -> Mor:
    return _structural(a, tensor_obj(a, UNIT))


def braiding(a: Obj, b: Obj) -> Mor:
    """``A⊗B -> B⊗A``, sending index ``i*|B|+j`` to ``j*|A|+i``."""
    n = a.dim * b.dim
    entries = {(j * a.dim + i, i * b.dim + j): ONE for i in range(a.dim) for j in range(b.dim)}
    return Mor(tensor_obj(a, b), tensor_obj(b, a), Matrix.from_sparse(n, n, entries))


# -- closed structure ---------------------------------------------------------

def evaluation(a: Obj, b: Obj) -> Mor:
    """``A ⊗ Hom(A, B) -> B``."""
    h = hom_obj(a, b)
    entries = {(j, i * h.dim + i * b.dim + j): ONE for i in range(a.dim) for j in range(b.dim)}
    return Mor(tensor_obj(a, h), b, Matrix.from_sparse(b.dim, a.dim * h.dim, entries))


def curry(f: Mor) -> Mor:
    """``f: A⊗B -> C`` becomes ``B -> Hom(A, C)``."""
    a, b = _parts(f.dom, "tensor")
    c = f.cod
    entries = {}
    for (row, col), v in _nonzeros(f.mat):
        i, k = divmod(col, b.dim)
        entries[(i * c.dim + row, k)] = v
    h = hom_obj(a, c)
    return Mor(b, h, Matrix.from_sparse(h.dim, b.dim, entries))


def uncurry(g: Mor) -> Mor:
    """``g: B -> Hom(A, C)`` becomes ``A⊗B -> C``."""
    a, c = _parts(g.cod, "hom")
    return evaluation(a, c) @ tensor_mor(identity(a), g)


def hom_lift(a: Obj, b: Obj, c: Obj) -> Mor:
    """``Hom(A⊗B, C) -> Hom(B, Hom(A, C))``, acting on elements as :func:`curry`."""
    src = hom_obj(tensor_obj(a, b), c)
    dst = hom_obj(b, hom_obj(a, c))
    entries = {}
    for i in range(a.dim):
        for k in range(b.dim):
            for j in range(c.dim):
                entries[(k * a.dim * c.dim + i * c.dim + j, (i * b.dim + k) * c.dim + j)] = ONE
    return Mor(src, dst, Matrix.from_sparse(dst.dim, src.dim, entries))


def composition_map(x: Obj, y: Obj, z: Obj) -> Mor:
    """``Hom(X,Y) ⊗ Hom(Y,Z) -> Hom(X,Z)``, ``f ⊗ g -> g∘f``."""
    hxy, hyz, hxz = hom_obj(x, y), hom_obj(y, z), hom_obj(x, z)
    entries = {}
    for i in range(x.dim):
        for j in range(y.dim):
            for k in range(z.dim):
                entries[(i * z.dim + k, (i * y.dim + j) * hyz.dim + j * z.dim + k)] = ONE
    dom = tensor_obj(hxy, hyz)
    return Mor(dom, hxz, Matrix.from_sparse(hxz.dim, dom.dim, entries))


def inflation_map(x: Obj, y: Obj, z: Obj) -> Mor:
    """``Hom(X,Y) -> Hom(Z⊗X, Z⊗Y)``, ``f -> Id_Z ⊗ f``."""
    src, dst = hom_obj(x, y), hom_obj(tensor_obj(z, x), tensor_obj(z, y))
    zy = z.dim * y.dim
    entries = {}
    for w in range(z.dim):
        for i in range(x.dim):
            for j in range(y.dim):
                entries[((w * x.dim + i) * zy + w * y.dim + j, i * y.dim + j)] = ONE
    return Mor(src, dst, Matrix.from_sparse(dst.dim, src.dim, entries))


def precompose_map(h: Mor, target: Obj) -> Mor:
    """``Hom(X, T) -> Hom(U, T)``, ``f -> f∘h`` for ``h: U -> X``."""
    return Mor(hom_obj(h.cod, target), hom_obj(h.dom, target),
               h.mat.T.kron(Matrix.identity(target.dim)))


def postcompose_map(k: Mor, source: Obj) -> Mor:
    """``Hom(S, Y) -> Hom(S, Z)``, ``f -> k∘f`` for ``k: Y -> Z``."""
    return Mor(hom_obj(source, k.dom), hom_obj(source, k.cod),
               Matrix.identity(source.dim).kron(k.mat))


# -- elements -----------------------------------------------------------------

def element(f: Mor) -> Matrix:
    """The column of ``Hom(dom, cod)`` representing ``f``."""
    m = f.mat
    return Matrix.column([m[j, i] for i in range(m.cols) for j in range(m.rows)])


def from_element(v: Matrix, dom: Obj, cod: Obj) -> Mor:
    if v.shape != (dom.dim * cod.dim, 1):
        raise ValueError("element has wrong length")
    return Mor(dom, cod, Matrix.from_rows(
        [[v[i * cod.dim + j, 0] for i in range(dom.dim)] for j in range(cod.dim)], dom.dim))


def point(x: Obj, v: Matrix) -> Mor:
    """A vector of ``X`` as a morphism ``𝟙 -> X``."""
    return Mor(UNIT, x, v)


# -- biproducts ---------------------------------------------------------------

def injection(a: Obj, b: Obj, which: int) -> Mor:
    s = sum_obj(a, b)
    part = (a, b)[which]
    off = 0 if which == 0 else a.dim
    return Mor(part, s, Matrix.from_sparse(s.dim, part.dim, {(off + i, i): ONE for i in range(part.dim)}))


def projection(a: Obj, b: Obj, which: int) -> Mor:
    s = sum_obj(a, b)
    part = (a, b)[which]
    off = 0 if which == 0 else a.dim
    return Mor(s, part, Matrix.from_sparse(part.dim, s.dim, {(i, off + i): ONE for i in range(part.dim)}))


def _nonzeros(m: Matrix):
    for i, r in enumerate(m.sparse_rows):
        for j, v in r.items():
            yield (i, j), v
