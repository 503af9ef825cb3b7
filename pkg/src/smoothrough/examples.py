"""Example algebras: matrix algebras, zero algebras and pairing algebras.

A pairing algebra is built from two spaces ``V``, ``W`` and a pairing
``b: W⊗V -> 𝟙``.  Its carrier is ``V⊗W`` with product
``(v1⊗w1)(v2⊗w2) = b(w1⊗v2)·v1⊗w2``; ``V`` is a left module and ``W`` a
right module.  When some ``b(w⊗v) = 1`` the algebra is self-induced, and
``V``, ``W`` give a Morita equivalence with ``𝟙``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import (
    Algebra, Module, direct_sum, is_module_map, left_regular, object_tensor_module, tensor_with_object,
    trivial_module, unit_algebra, zero_action_module,
)
from .balanced import balanced_hom, kernel, right_inflation_map
from .category import (
    UNIT, Mor, Obj, associator, associator_inv, atom, hom_obj, identity, inflation_map,
    left_unitor, left_unitor_inv, point, postcompose_map, right_unitor, sum_obj, tensor_mor,
    tensor_obj, zero_mor,
)
from .linalg import Matrix, kernel_basis, rank, scalar
from .report import Report


class NotDegenerate(ValueError):
    """The pairing has no degenerate direction in ``V``."""


# -- matrix and zero algebras ----------------------------------------------------

def matrix_algebra(n: int) -> Algebra:
    """``M_n`` on matrix units ``E_ij`` (index ``i*n + j``), unital."""
    A = atom(f"M{n}", n * n)
    ent = {}
    for i in range(n):
        for j in range(n):
            for l in range(n):
                ent[(i * n + l, (i * n + j) * n * n + j * n + l)] = 1
    mu = Mor(tensor_obj(A, A), A, Matrix.from_sparse(n * n, n ** 4, ent))
    eta = Mor(UNIT, A, Matrix.from_sparse(n * n, 1, {(i * n + i, 0): 1 for i in range(n)}))
    return Algebra(A, mu, eta, name=f"M{n}")


def column_module(a: Algebra, n: int) -> Module:
    """``k^n`` with ``E_ij e_l = δ_jl e_i``."""
    X = atom(f"col{n}", n)
    ent = {(i, (i * n + j) * n + j): 1 for i in range(n) for j in range(n)}
    act = Mor(tensor_obj(a.carrier, X), X, Matrix.from_sparse(n, n ** 3, ent))
    return Module(X, a, act, name=f"col{n}")


def row_module(a: Algebra, n: int) -> Module:
    """``k^n`` with ``e_l E_ij = δ_li e_j``."""
    X = atom(f"row{n}", n)
    ent = {(j, i * n * n + i * n + j): 1 for i in range(n) for j in range(n)}
    act = Mor(tensor_obj(X, a.carrier), X, Matrix.from_sparse(n, n ** 3, ent))
    return Module(X, right=a, act_right=act, name=f"row{n}")


def zero_algebra(d: int) -> Algebra:
    A = atom(f"Z{d}", d)
    return Algebra(A, zero_mor(tensor_obj(A, A), A), name=f"Z{d}")


# -- pairing algebras ----------------------------------------------------------------

@dataclass(frozen=True)
class PairingSpec:
    dim_v: int
    dim_w: int
    b: tuple  # entries of the 1 x (dim_w*dim_v) row; index w*dim_v + v
    witness_v: tuple | None = None
    witness_w: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(scalar(x) for x in self.b))
        if len(self.b) != self.dim_w * self.dim_v:
            raise ValueError(f"pairing needs {self.dim_w * self.dim_v} entries, got {len(self.b)}")
        if self.witness_v is None or self.witness_w is None:
            nz = [k for k, x in enumerate(self.b) if x]
            if not nz:
                raise ValueError("degenerate pairing: b = 0 admits no witnesses")
            w, v = divmod(nz[0], self.dim_v)
            c = self.b[nz[0]]
            object.__setattr__(self, "witness_v", tuple(Fraction(int(i == v)) for i in range(self.dim_v)))
            object.__setattr__(self, "witness_w", tuple(Fraction(int(i == w)) / c for i in range(self.dim_w)))
        else:
            object.__setattr__(self, "witness_v", tuple(scalar(x) for x in self.witness_v))
            object.__setattr__(self, "witness_w", tuple(scalar(x) for x in self.witness_w))
        if self.pairing_value() != 1:
            raise ValueError("witnesses must satisfy b(w⊗v) = 1")

    def pairing_value(self) -> Fraction:
        dv = self.dim_v
        return sum((self.witness_w[w] * self.witness_v[v] * self.b[w * dv + v]
                    for w in range(self.dim_w) for v in range(dv)), Fraction(0))

    @property
    def label(self) -> str:
        return f"P({self.dim_v},{self.dim_w};{','.join(map(str, self.b))})"


@dataclass(frozen=True, eq=False)
class PairingAlgebra:
    spec: PairingSpec
    V: Obj
    W: Obj
    b: Mor
    algebra: Algebra
    v_module: Module   # left A
    w_module: Module   # right A
    section: Mor       # A -> A⊗A
    report: Report = field(default_factory=lambda: Report("pairing"))

    @property
    def P(self) -> Module:
        """``V`` as an ``A,𝟙``-bimodule."""
        k = unit_algebra()
        return Module(self.V, self.algebra, self.v_module.act_left, k, right_unitor(self.V), name="V")

    @property
    def Q(self) -> Module:
        """``W`` as a ``𝟙,A``-bimodule."""
        k = unit_algebra()
        return Module(self.W, k, left_unitor(self.W), self.algebra, self.w_module.act_right, name="W")


def build_pairing_algebra(spec: PairingSpec) -> PairingAlgebra:
    V, W = atom("V", spec.dim_v), atom("W", spec.dim_w)
    wv = tensor_obj(W, V)
    b = Mor(wv, UNIT, Matrix.from_rows([list(spec.b)], wv.dim))
    A = tensor_obj(V, W)
    iV, iW = identity(V), identity(W)
    mu = (tensor_mor(iV, left_unitor(W))
          @ tensor_mor(iV, tensor_mor(b, iW))
          @ tensor_mor(iV, associator_inv(W, V, W))
          @ associator(V, W, A))
    alg = Algebra(A, mu, name=spec.label)
    act_v = right_unitor(V) @ tensor_mor(iV, b) @ associator(V, W, V)
    act_w = left_unitor(W) @ tensor_mor(b, iW) @ associator_inv(W, V, W)
    vm = Module(V, alg, act_v, name="V")
    wm = Module(W, right=alg, act_right=act_w, name="W")

    v = point(V, Matrix.column(spec.witness_v))
    w = point(W, Matrix.column(spec.witness_w))
    t = tensor_mor(w, v) @ left_unitor_inv(UNIT)  # 𝟙 -> W⊗V
    sec = (associator_inv(V, W, A)
           @ tensor_mor(iV, associator(W, V, W))
           @ tensor_mor(iV, tensor_mor(t, iW))
           @ tensor_mor(iV, left_unitor_inv(W)))

    rep = Report(f"pairing algebra {spec.label}")
    rep.add("b(w⊗v) = 1", (b @ t).mat == Matrix.identity(1))
    rep.equal("μ∘σ = Id", mu @ sec, identity(A))
    aa = bimodule_tensor_square(alg)
    rep.add("σ is a bimodule map", is_module_map(sec, alg.regular, aa))
    pa = PairingAlgebra(spec, V, W, b, alg, vm, wm, sec, rep)
    rep.add("self-induced", alg.self_induced)
    return pa


def bimodule_tensor_square(a: Algebra) -> Module:
    """``A⊗A`` with ``A`` acting on the outer factors."""
    A = a.carrier
    left = tensor_with_object(left_regular(a), A)
    right = object_tensor_module(A, a.regular.forget_left())
    return Module(tensor_obj(A, A), a, left.act_left, a, right.act_right, name="A⊗A")


def pairing_structure_constants(pa: PairingAlgebra) -> list[list[list[Fraction]]]:
    n = pa.algebra.dim
    m = pa.algebra.mu.mat
    return [[[m[k, i * n + j] for k in range(n)] for j in range(n)] for i in range(n)]


def degenerate_direction(spec: PairingSpec) -> Matrix:
    """Basis of ``{v : b(w⊗v) = 0 for all w}`` as columns."""
    dv = spec.dim_v
    bm = Matrix.from_rows([[spec.b[w * dv + v] for v in range(dv)] for w in range(spec.dim_w)])
    return kernel_basis(bm)


def double_centralizer(pa: PairingAlgebra) -> Algebra:
    """Pairs ``(L, R)`` in ``Hom(V,V) ⊕ Hom(W,W)`` with ``b∘(W⊗L) = b∘(R⊗V)``.

    Product ``(L1, R1)(L2, R2) = (L1∘L2, R2∘R1)``; unit ``(Id, Id)``.
    """
    V, W, b = pa.V, pa.W, pa.b
    hv, hw = hom_obj(V, V), hom_obj(W, W)
    c1 = postcompose_map(b, tensor_obj(W, V)) @ inflation_map(V, V, W)
    c2 = postcompose_map(b, tensor_obj(W, V)) @ right_inflation_map(W, W, V)
    S = sum_obj(hv, hw)
    cons = Mor(S, c1.cod, c1.mat.hstack(-c2.mat))
    k = kernel(cons, name=f"DC({pa.spec.label})")
    n = k.obj.dim
    dv2 = hv.dim

    def split(col: Matrix) -> tuple[Matrix, Matrix]:
        vals = [col[i, 0] for i in range(col.rows)]
        return _mat_of(vals[:dv2], V.dim), _mat_of(vals[dv2:], W.dim)

    basis = [split(k.incl.mat.col(i)) for i in range(n)]
    cols = {}
    for i, (l1, r1) in enumerate(basis):
        for j, (l2, r2) in enumerate(basis):
            prod = _vec_of(l1 @ l2) + _vec_of(r2 @ r1)
            coords = k.retr.mat @ Matrix.column(prod)
            for r in range(n):
                if coords[r, 0]:
                    cols[(r, i * n + j)] = coords[r, 0]
    mu = Mor(tensor_obj(k.obj, k.obj), k.obj, Matrix.from_sparse(n, n * n, cols))
    one = _vec_of(Matrix.identity(V.dim)) + _vec_of(Matrix.identity(W.dim))
    unit = Mor(UNIT, k.obj, k.retr.mat @ Matrix.column(one))
    if not (cons.mat @ Matrix.column(one)).is_zero():
        raise ValueError("identity pair violates the constraint")
    return Algebra(k.obj, mu, unit, name=f"DC({pa.spec.label})")


def _mat_of(vals: list, d: int) -> Matrix:
    # Hom(X, X) flattening: index i*d + j is e_i -> e_j
    return Matrix.from_rows([[vals[i * d + j] for i in range(d)] for j in range(d)], d)


def _vec_of(m: Matrix) -> list:
    return [m[j, i] for i in range(m.cols) for j in range(m.rows)]


# -- corpus ----------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CorpusEntry:
    name: str
    kind: str
    algebra: Algebra
    modules: tuple
    pairing: PairingAlgebra | None = None


def standard_modules(a: Algebra) -> list[Module]:
    reg = left_regular(a).renamed("A")
    z = zero_action_module(a, atom("Z", 1), name="0-action")
    return [reg, z, direct_sum(reg, z, name="A⊕0-action")]


def pairing_modules(pa: PairingAlgebra, x0: Obj) -> list[Module]:
    vx = tensor_with_object(pa.v_module, x0, name=f"V⊗{x0}")
    hw = balanced_hom(pa.Q, trivial_module(x0, name=str(x0)), name=f"Hom(W,{x0})").module.forget_right()
    return [pa.v_module, vx, hw]


def pairing_specs(max_dim: int) -> list[tuple[PairingSpec, str]]:
    out = []
    for dv in range(1, max_dim * max_dim + 1):
        for dw in range(1, max_dim * max_dim + 1):
            if dv * dw > max_dim * max_dim:
                continue
            full = [1 if w == v else 0 for w in range(dw) for v in range(dv)]
            out.append((PairingSpec(dv, dw, tuple(full)), "full"))
            if min(dv, dw) >= 2:
                r1 = [1 if (w, v) == (0, 0) else 0 for w in range(dw) for v in range(dv)]
                out.append((PairingSpec(dv, dw, tuple(r1)), "rank1"))
    return out


def standard_corpus(max_dim: int) -> list[CorpusEntry]:
    """A deterministic list of algebras with sample modules.

    ``𝟙``; zero algebras of dims ``1..min(2, max_dim)``; ``M_n`` for
    ``n <= min(2, max_dim)``; pairing algebras with ``dim V·dim W <= max_dim²``,
    taking the diagonal pairing and, when both dims are at least 2, a rank-one one.
    """
    if max_dim < 1:
        raise ValueError("max_dim must be at least 1")
    out = []
    k = unit_algebra()
    out.append(CorpusEntry("unit", "unit", k, tuple(standard_modules(k))))
    for d in range(1, min(2, max_dim) + 1):
        z = zero_algebra(d)
        out.append(CorpusEntry(z.name, "zero", z, tuple(standard_modules(z))))
    for n in range(1, min(2, max_dim) + 1):
        m = matrix_algebra(n)
        mods = standard_modules(m) + [column_module(m, n)]
        out.append(CorpusEntry(m.name, "matrix", m, tuple(mods)))
    x0 = atom("X0", 2)
    for spec, tag in pairing_specs(max_dim):
        pa = build_pairing_algebra(spec)
        mods = standard_modules(pa.algebra) + pairing_modules(pa, x0)
        out.append(CorpusEntry(f"{spec.label}[{tag}]", "pairing", pa.algebra, tuple(mods), pa))
    return out


def nonmonic_smoothening_demo(spec: PairingSpec) -> Report:
    """``Smooth(M_l(A)) -> M_l(A)`` fails to be injective when ``b`` kills a direction of ``V``."""
    from .smooth_rough import multiplier_module, smoothening

    ker = degenerate_direction(spec)
    if ker.cols == 0:
        raise NotDegenerate(f"pairing {spec.label} has no degenerate direction in V")
    pa = build_pairing_algebra(spec)
    x = multiplier_module(pa.algebra)
    s = smoothening(x)
    r = rank(s.bar_mu.mat)
    rep = Report(f"non-monic smoothening for {spec.label}")
    rep.info.update({"dim Smooth(M_l(A))": s.module.dim, "dim M_l(A)": x.dim,
                     "dim A": pa.algebra.dim, "rank": r, "degenerate_directions": ker.cols})
    rep.add("Smooth(M_l(A)) ≅ A by dimension", s.module.dim == pa.algebra.dim)
    rep.add("canonical map is not monic", r < s.module.dim)
    return rep
