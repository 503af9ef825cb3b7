"""Balanced tensor products, balanced internal Homs and module-map spaces.

``X ⊗_A Y`` is presented as the cokernel of
``b' = μ_X⊗Y - (X⊗μ_Y)∘α : (X⊗A)⊗Y -> X⊗Y`` and ``Hom_A(X, Y)`` as the
kernel of ``f -> f∘μ_X - μ_Y∘(A⊗f)`` inside ``Hom(X, Y)``.  Cokernels carry
a chosen section and kernels a chosen retraction, both read off the free
columns of an rref, so every presentation is deterministic.

Maps are never pushed through a quotient (or into a subobject) without
first checking that they actually descend; a failure raises
:class:`DescentError`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Algebra, Module, is_module_map
from .category import (
    Mor, Obj, TypeMismatch, associator, associator_inv, atom, braiding, coker_obj, curry,
    element, evaluation, from_element, hom_obj, identity, inflation_map, ker_obj,
    postcompose_map, precompose_map, sum_obj, tensor_mor, tensor_obj, uncurry, zero_mor,
)
from .linalg import Matrix, hstack_all, nullspace, rank, vstack_all
from .report import Report

ZERO_OBJ = atom("0", 0)


class DescentError(RuntimeError):
    """A map that should factor through a quotient or subobject does not."""


@dataclass(frozen=True, eq=False)
class Cokernel:
    relation: Mor  # f: R -> V
    proj: Mor      # p: V -> Q, p∘f = 0
    section: Mor   # s: Q -> V, p∘s = Id

    @property
    def obj(self) -> Obj:
        return self.proj.cod

    @property
    def ambient(self) -> Obj:
        return self.proj.dom

    def descend(self, g: Mor) -> Mor:
        """The map ``Q -> Z`` induced by ``g: V -> Z``."""
        if not (g @ self.relation).is_zero():
            raise DescentError(f"map {g.dom} -> {g.cod} does not vanish on the relations")
        return g @ self.section


@dataclass(frozen=True, eq=False)
class Kernel:
    constraint: Mor  # c: V -> W
    incl: Mor        # ι: K -> V, c∘ι = 0
    retr: Mor        # r: V -> K, r∘ι = Id

    @property
    def obj(self) -> Obj:
        return self.incl.dom

    @property
    def ambient(self) -> Obj:
        return self.incl.cod

    def contains(self, g: Mor) -> bool:
        return (self.constraint @ g).is_zero()

    def corestrict(self, g: Mor) -> Mor:
        """``g: Z -> V`` landing in the kernel, viewed as ``Z -> K``."""
        if not self.contains(g):
            raise DescentError(f"map {g.dom} -> {g.cod} does not land in the kernel")
        return self.retr @ g


Presentation = Cokernel | Kernel


def cokernel(f: Mor, name: str = "") -> Cokernel:
    basis, free = nullspace(f.mat.T)
    q = coker_obj(f, basis.cols, name)
    proj = Mor(f.cod, q, basis.T)
    sec = Mor(q, f.cod, Matrix.from_sparse(f.cod.dim, len(free), {(j, k): 1 for k, j in enumerate(free)}))
    return Cokernel(f, proj, sec)


def kernel(c: Mor, name: str = "") -> Kernel:
    basis, free = nullspace(c.mat)
    k = ker_obj(c, basis.cols, name)
    incl = Mor(k, c.dom, basis)
    retr = Mor(c.dom, k, Matrix.from_sparse(len(free), c.dom.dim, {(i, j): 1 for i, j in enumerate(free)}))
    return Kernel(c, incl, retr)


def between_cokernels(src: Cokernel, dst: Cokernel, h: Mor) -> Mor:
    """The map ``Q -> Q'`` induced by ``h`` on the ambients."""
    return src.descend(dst.proj @ h)


def between_kernels(src: Kernel, dst: Kernel, h: Mor) -> Mor:
    return dst.corestrict(h @ src.incl)


# -- balanced tensor product --------------------------------------------------------

@dataclass(frozen=True, eq=False)
class BalancedTensor:
    left: Module
    right: Module
    algebra: Algebra
    coker: Cokernel
    module: Module

    @property
    def obj(self) -> Obj:
        return self.coker.obj

    @property
    def relation(self) -> Mor:
        return self.coker.relation

    @property
    def proj(self) -> Mor:
        return self.coker.proj

    @property
    def section(self) -> Mor:
        return self.coker.section


def balanced_relation(x: Module, y: Module) -> Mor:
    """``μ_X⊗Y - (X⊗μ_Y)∘α : (X⊗A)⊗Y -> X⊗Y``."""
    a = x.right
    if a is None or y.left is None or y.left != a:
        raise TypeMismatch("balanced tensor needs a right A-module and a left A-module")
    X, Y, A = x.carrier, y.carrier, a.carrier
    return (tensor_mor(x.act_right, identity(Y))
            - tensor_mor(identity(X), y.act_left) @ associator(X, A, Y))


def balanced_tensor(x: Module, y: Module, name: str = "") -> BalancedTensor:
    rel = balanced_relation(x, y)
    name = name or f"{x.name}⊗_{x.right.name or 'A'}{y.name}"
    ck = cokernel(rel, name)
    X, Y, Q = x.carrier, y.carrier, ck.obj
    act_l = act_r = None
    if x.left is not None:
        B = x.left.carrier
        h = ck.proj @ tensor_mor(x.act_left, identity(Y)) @ associator_inv(B, X, Y)
        if not (h @ tensor_mor(identity(B), rel)).is_zero():
            raise DescentError("left action does not descend to the balanced tensor product")
        act_l = h @ tensor_mor(identity(B), ck.section)
    if y.right is not None:
        C = y.right.carrier
        h = ck.proj @ tensor_mor(identity(X), y.act_right) @ associator(X, Y, C)
        if not (h @ tensor_mor(rel, identity(C))).is_zero():
            raise DescentError("right action does not descend to the balanced tensor product")
        act_r = h @ tensor_mor(ck.section, identity(C))
    mod = Module(Q, x.left, act_l, y.right, act_r, name=name)
    return BalancedTensor(x, y, x.right, ck, mod)


def balanced_tensor_mor(src: BalancedTensor, dst: BalancedTensor, f: Mor, g: Mor) -> Mor:
    """``f ⊗_A g`` for module maps ``f: X -> X'`` (right A-linear) and ``g: Y -> Y'``."""
    return between_cokernels(src.coker, dst.coker, tensor_mor(f, g))


# -- balanced internal Hom ---------------------------------------------------------

def right_inflation_map(x: Obj, y: Obj, c: Obj) -> Mor:
    """``Hom(X,Y) -> Hom(X⊗C, Y⊗C)``, ``f -> f ⊗ Id_C``."""
    return (postcompose_map(braiding(c, y), tensor_obj(x, c))
            @ precompose_map(braiding(x, c), tensor_obj(c, y))
            @ inflation_map(x, y, c))


def left_linearity(a: Algebra, act_u: Mor, act_z: Mor) -> Mor:
    """``f -> f∘μ_U - μ_Z∘(A⊗f)`` on ``Hom(U, Z)``."""
    U, Z, A = act_u.cod, act_z.cod, a.carrier
    return (precompose_map(act_u, Z)
            - postcompose_map(act_z, tensor_obj(A, U)) @ inflation_map(U, Z, A))


def right_linearity(c: Algebra, act_u: Mor, act_z: Mor) -> Mor:
    """``f -> f∘μ_U - μ_Z∘(f⊗C)`` on ``Hom(U, Z)``."""
    U, Z, C = act_u.cod, act_z.cod, c.carrier
    return (precompose_map(act_u, Z)
            - postcompose_map(act_z, tensor_obj(U, C)) @ right_inflation_map(U, Z, C))


def _stack(h: Obj, maps: list[Mor]) -> Mor:
    if not maps:
        return zero_mor(h, ZERO_OBJ)
    out = maps[0]
    for m in maps[1:]:
        cod = sum_obj(out.cod, m.cod)
        out = Mor(h, cod, vstack_all([out.mat, m.mat], h.dim))
    return out


@dataclass(frozen=True, eq=False)
class BalancedHom:
    src: Module
    dst: Module
    algebra: Algebra | None
    kernel: Kernel
    module: Module

    @property
    def obj(self) -> Obj:
        return self.kernel.obj


def balanced_hom(x: Module, y: Module, name: str = "") -> BalancedHom:
    """``Hom_A(X, Y)`` for left ``A``-modules; ``B``/``C`` act through ``X``'s right and ``Y``'s right actions."""
    if x.left != y.left:
        raise TypeMismatch("balanced Hom needs two left modules over the same algebra")
    X, Y = x.carrier, y.carrier
    H = hom_obj(X, Y)
    a = x.left
    cons = [left_linearity(a, x.act_left, y.act_left)] if a is not None else []
    name = name or f"Hom_{a.name if a else '𝟙'}({x.name},{y.name})"
    ker = kernel(_stack(H, cons), name)
    ev = evaluation(X, Y)
    act_l = act_r = None
    if x.right is not None:
        B = x.right.carrier
        # b·f = f∘(−·b)
        full = curry(ev @ tensor_mor(x.act_right, identity(H)) @ associator_inv(X, B, H))
        act_l = ker.corestrict(full @ tensor_mor(identity(B), ker.incl))
    if y.right is not None:
        C = y.right.carrier
        # f·c = (−·c)∘f
        full = curry(y.act_right @ tensor_mor(ev, identity(C)) @ associator_inv(X, H, C))
        act_r = ker.corestrict(full @ tensor_mor(ker.incl, identity(C)))
    mod = Module(ker.obj, x.right, act_l, y.right, act_r, name=name)
    return BalancedHom(x, y, a, ker, mod)


def balanced_hom_mor(src: BalancedHom, dst: BalancedHom, f: Mor, g: Mor) -> Mor:
    """``Hom_A(f, g): φ -> g∘φ∘f`` for ``f: X' -> X`` and ``g: Y -> Y'``."""
    h = postcompose_map(g, f.dom) @ precompose_map(f, g.dom)
    return between_kernels(src.kernel, dst.kernel, h)


# -- spaces of module maps -------------------------------------------------------------

def module_maps(u: Module, z: Module) -> Kernel:
    """``C_{A,C}(U, Z)`` as a kernel inside ``Hom(U, Z)``.

    A side contributes a linearity constraint when both modules act on it.
    """
    H = hom_obj(u.carrier, z.carrier)
    cons = []
    if u.left is not None and z.left is not None:
        if u.left != z.left:
            raise TypeMismatch("left actions are over different algebras")
        cons.append(left_linearity(u.left, u.act_left, z.act_left))
    if u.right is not None and z.right is not None:
        if u.right != z.right:
            raise TypeMismatch("right actions are over different algebras")
        cons.append(right_linearity(u.right, u.act_right, z.act_right))
    return kernel(_stack(H, cons), f"C({u.name},{z.name})")


def map_of(ker: Kernel, k: int) -> Mor:
    """Basis element ``k`` of a kernel inside ``Hom(U, Z)`` as a morphism ``U -> Z``."""
    u, z = ker.ambient.parts
    return from_element(ker.incl.mat.col(k), u, z)


def maps_basis(ker: Kernel) -> list[Mor]:
    return [map_of(ker, k) for k in range(ker.obj.dim)]


def kernel_map(src: Kernel, dst: Kernel, fn) -> Mor:
    """The linear map ``src -> dst`` given on elements by ``fn: Mor -> Mor``."""
    u2, z2 = dst.ambient.parts
    cols = []
    for f in maps_basis(src):
        g = fn(f)
        if g.dom != u2 or g.cod != z2:
            raise TypeMismatch(f"image {g.dom} -> {g.cod} is not in Hom({u2}, {z2})")
        v = element(g)
        if not (dst.constraint.mat @ v).is_zero():
            raise DescentError("image element violates the target constraints")
        cols.append(dst.retr.mat @ v)
    return Mor(src.obj, dst.obj, hstack_all(cols, dst.obj.dim))


@dataclass
class Bijection:
    """An explicit linear map between two solution spaces plus its claimed inverse."""

    name: str
    forward: Mor
    backward: Mor | None = None
    info: dict = field(default_factory=dict)

    @property
    def dims(self) -> tuple[int, int]:
        return (self.forward.dom.dim, self.forward.cod.dim)

    def verify(self, report: Report | None = None) -> bool:
        ok = self.forward.is_iso()
        if self.backward is not None:
            ok = ok and (self.backward @ self.forward == identity(self.forward.dom)
                         and self.forward @ self.backward == identity(self.forward.cod))
        if report is not None:
            report.add(self.name, ok, lhs_dim=self.dims[0], rhs_dim=self.dims[1])
        return ok


def adjunction_tensor_hom(x: Module, y: Module, z: Module,
                          t: BalancedTensor | None = None, h: BalancedHom | None = None) -> Bijection:
    """``C_{B,C}(X⊗_A Y, Z) ≅ C_{A,C}(Y, Hom_B(X, Z))`` via currying."""
    t = t or balanced_tensor(x, y)
    h = h or balanced_hom(x, z)
    lhs = module_maps(t.module, z)
    rhs = module_maps(y, h.module)

    def fwd(phi: Mor) -> Mor:
        return h.kernel.corestrict(curry(phi @ t.proj))

    def bwd(psi: Mor) -> Mor:
        return t.coker.descend(uncurry(h.kernel.incl @ psi))

    return Bijection("tensor-hom adjunction", kernel_map(lhs, rhs, fwd), kernel_map(rhs, lhs, bwd),
                     info={"tensor": t, "hom": h, "lhs": lhs, "rhs": rhs,
                           "forward_fn": fwd, "backward_fn": bwd})


def triple_assoc(x: Module, y: Module, z: Module) -> tuple[Mor, Report]:
    """The canonical iso ``(X⊗_A Y)⊗_C Z -> X⊗_A (Y⊗_C Z)``."""
    xy = balanced_tensor(x, y)
    lhs = balanced_tensor(xy.module, z)
    yz = balanced_tensor(y, z)
    rhs = balanced_tensor(x, yz.module)
    X, Z = x.carrier, z.carrier
    pi_l = lhs.proj @ tensor_mor(xy.proj, identity(Z))
    pi_r = rhs.proj @ tensor_mor(identity(X), yz.proj)
    h = pi_r @ associator(X, y.carrier, Z)
    ker_l = nullspace(pi_l.mat)[0]
    if not (h.mat @ ker_l).is_zero():
        raise DescentError("associativity map does not descend")
    iso = h @ tensor_mor(xy.section, identity(Z)) @ lhs.section
    rep = Report("balanced associativity")
    rep.info.update(lhs_dim=lhs.obj.dim, rhs_dim=rhs.obj.dim)
    rep.add("invertible", iso.is_iso())
    rep.add("bimodule map", is_module_map(iso, lhs.module, rhs.module))
    rep.add("compatible with projections", iso @ pi_l == h)
    return iso, rep


def coker_dim_check(ck: Cokernel) -> bool:
    return ck.obj.dim == ck.ambient.dim - rank(ck.relation.mat)
