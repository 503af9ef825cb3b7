"""Functors induced by bimodules, Morita equivalences and algebra homomorphisms.

Everything here is checked on explicitly supplied sample modules; nothing
is claimed about module categories as a whole.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import (
    Algebra, AxiomError, Module, is_algebra_hom, is_module_map, pullback, pullback_right,
    unit_algebra,
)
from .balanced import (
    BalancedHom, BalancedTensor, Bijection, DescentError, adjunction_tensor_hom, balanced_hom,
    balanced_hom_mor, balanced_tensor, balanced_tensor_mor, kernel_map, module_maps,
    triple_assoc,
)
from .category import (
    UNIT, Mor, associator, associator_inv, curry, identity, left_unitor, right_unitor, tensor_mor,
    tensor_obj, uncurry,
)
from .examples import column_module, matrix_algebra, row_module
from .linalg import Matrix
from .report import Report
from .smooth_rough import (
    is_rough, is_smooth, is_smooth_right, roughening, smoothen_mor, smoothening,
)


# -- functors from bimodules -----------------------------------------------------------

class TensorFunctor:
    """``X -> M ⊗_B X`` for an ``A,B``-bimodule ``M``."""

    def __init__(self, m: Module):
        if m.left is None or m.right is None:
            raise AxiomError("typing", "tensor functor needs a bimodule")
        self.m = m
        self._cache: dict = {}

    def tensor(self, x: Module) -> BalancedTensor:
        if x not in self._cache:
            self._cache[x] = balanced_tensor(self.m, x, name=f"{self.m.name}⊗{x.name}")
        return self._cache[x]

    def obj(self, x: Module) -> Module:
        return self.tensor(x).module

    def mor(self, f: Mor, x: Module, y: Module) -> Mor:
        return balanced_tensor_mor(self.tensor(x), self.tensor(y), identity(self.m.carrier), f)


class HomFunctor:
    """``Y -> Hom_A(M, Y)`` for an ``A,B``-bimodule ``M`` (lands in left ``B``-modules)."""

    def __init__(self, m: Module):
        if m.left is None or m.right is None:
            raise AxiomError("typing", "hom functor needs a bimodule")
        self.m = m
        self._cache: dict = {}

    def hom(self, y: Module) -> BalancedHom:
        if y not in self._cache:
            self._cache[y] = balanced_hom(self.m, y, name=f"Hom({self.m.name},{y.name})")
        return self._cache[y]

    def obj(self, y: Module) -> Module:
        return self.hom(y).module

    def mor(self, g: Mor, y: Module, z: Module) -> Mor:
        return balanced_hom_mor(self.hom(y), self.hom(z), identity(self.m.carrier), g)


def tensor_functor(m: Module) -> TensorFunctor:
    return TensorFunctor(m)


def hom_functor(m: Module) -> HomFunctor:
    return HomFunctor(m)


def bimodule_adjunction(m: Module, x: Module, y: Module) -> Bijection:
    """``C_A(M ⊗_B X, Y) ≅ C_B(X, Hom_A(M, Y))``."""
    return adjunction_tensor_hom(m, x, y)


def adjunction_naturality(m: Module, u: Mor, x1: Module, x: Module,
                          v: Mor, y: Module, y1: Module) -> bool:
    """Naturality of currying in ``u: X1 -> X`` and ``v: Y -> Y1``."""
    adj, adj1 = adjunction_tensor_hom(m, x, y), adjunction_tensor_hom(m, x1, y1)
    t, t1 = adj.info["tensor"], adj1.info["tensor"]
    h, h1 = adj.info["hom"], adj1.info["hom"]
    mu = balanced_tensor_mor(t1, t, identity(m.carrier), u)
    hv = balanced_hom_mor(h, h1, identity(m.carrier), v)
    t_lhs = kernel_map(adj.info["lhs"], adj1.info["lhs"], lambda phi: v @ phi @ mu)
    t_rhs = kernel_map(adj.info["rhs"], adj1.info["rhs"], lambda psi: hv @ psi @ u)
    return adj1.forward @ t_lhs == t_rhs @ adj.forward


# -- preservation of smoothness and roughness ------------------------------------------

def right_smoothening(m: Module) -> BalancedTensor:
    """``M ⊗_A A`` for a module with a right ``A``-action."""
    return balanced_tensor(m, m.right.regular, name=f"S_r({m.name})")


def smooth_rough_preservation(m: Module, y: Module) -> Report:
    """Tensoring with a left-smooth bimodule gives smooth modules; Hom out of a right-smooth one gives rough ones.

    ``m`` is used as an ``A,B``-bimodule for the first statement (``y`` a left
    ``B``-module) and, when its right algebra is self-induced, as a
    ``B',A'``-bimodule for the second.  Preconditions are reported, not assumed.
    """
    rep = Report(f"preservation for {m.name}, {y.name}")
    a = m.left
    # first clause: M ⊗_B Y
    if a is not None and a.self_induced and y.left == m.right:
        pre = is_smooth(m.forget_right())
        rep.info["M smooth as left module"] = pre
        t = balanced_tensor(m, y)
        concl = is_smooth(t.module)
        rep.info["M⊗Y smooth"] = concl
        rep.info["dims M⊗Y, Smooth(M⊗Y)"] = [t.module.dim, smoothening(t.module).module.dim]
        if pre:
            rep.add("M⊗_B Y is smooth", concl)
        # Smooth_A(M ⊗_B Y) ≅ Smooth_A(M) ⊗_B Y
        iso, r = triple_assoc(a.regular, m, y)
        rep.add("Smooth(M⊗_B Y) ≅ Smooth(M)⊗_B Y", r.passed)
    # second clause: Hom_B(M, Y) with M a B,A-bimodule
    c = m.right
    if c is not None and c.self_induced and y.left == m.left:
        pre = is_smooth_right(m.forget_left())
        rep.info["M smooth as right module"] = pre
        h = balanced_hom(m, y)
        concl = is_rough(h.module)
        rep.info["Hom(M,Y) rough"] = concl
        if pre:
            rep.add("Hom_B(M, Y) is rough", concl)
        b = rough_hom_reduction(m, y)
        b.verify(rep)
    return rep


def rough_hom_reduction(m: Module, y: Module) -> Bijection:
    """``Hom_B(M ⊗_A A, Y) ≅ Rough_A(Hom_B(M, Y))`` by currying."""
    t = right_smoothening(m)
    h = balanced_hom(m, y)
    lhs = balanced_hom(t.module, y).kernel
    rough = roughening(h.module).hom.kernel

    def fwd(phi: Mor) -> Mor:
        return h.kernel.corestrict(curry(phi @ t.proj))

    def bwd(psi: Mor) -> Mor:
        return t.coker.descend(uncurry(h.kernel.incl @ psi))

    return Bijection("Rough(Hom_B(M,Y)) ≅ Hom_B(Smooth(M),Y)",
                     kernel_map(lhs, rough, fwd), kernel_map(rough, lhs, bwd))


def smoothened_hom_adjunction(m: Module, x: Module, y: Module,
                              us: list | None = None, vs: list | None = None) -> Report:
    """``C_A(M ⊗_B X, Y) ≅ C_B(X, Smooth_B(Hom_A(M, Y)))`` for smooth ``X``, ``Y``.

    ``us`` holds triples ``(u, X1, X)`` and ``vs`` triples ``(v, Y, Y1)`` of
    module maps along which naturality is checked.
    """
    rep = Report(f"smoothened adjunction for {m.name}; {x.name}, {y.name}")
    b = _smoothened_bijection(m, x, y)
    b.verify(rep)
    for u, x1, x0 in us or []:
        for v, y0, y1 in vs or []:
            b0, b1 = _smoothened_bijection(m, x0, y0), _smoothened_bijection(m, x1, y1)
            t0, t1 = b0.info["tensor"], b1.info["tensor"]
            mu = balanced_tensor_mor(t1, t0, identity(m.carrier), u)
            h0, h1 = b0.info["hom"], b1.info["hom"]
            hv = balanced_hom_mor(h0, h1, identity(m.carrier), v)
            shv = smoothen_mor(hv, h0.module.forget_right(), h1.module.forget_right())
            t_lhs = kernel_map(b0.info["lhs"], b1.info["lhs"], lambda phi: v @ phi @ mu)
            t_rhs = kernel_map(b0.info["rhs"], b1.info["rhs"], lambda psi: shv @ psi @ u)
            rep.add(f"natural in {x1.name}->{x0.name}, {y0.name}->{y1.name}",
                    b1.forward @ t_lhs == t_rhs @ b0.forward)
    return rep


def _smoothened_bijection(m: Module, x: Module, y: Module) -> Bijection:
    x = x.forget_right()
    y = y.forget_right()
    adj = adjunction_tensor_hom(m, x, y)
    h = adj.info["hom"]
    hb = h.module.forget_right()
    sh = smoothening(hb)
    sx = smoothening(x)
    inv_x = sx.bar_mu.inverse()
    lhs = adj.info["lhs"]
    rhs = module_maps(x, sh.module)
    fwd_fn, bwd_fn = adj.info["forward_fn"], adj.info["backward_fn"]

    def fwd(phi: Mor) -> Mor:
        return smoothen_mor(fwd_fn(phi), x, hb) @ inv_x

    def bwd(psi: Mor) -> Mor:
        return bwd_fn(sh.bar_mu @ psi)

    return Bijection("C_A(M⊗X, Y) ≅ C_B(X, Smooth(Hom_A(M,Y)))",
                     kernel_map(lhs, rhs, fwd), kernel_map(rhs, lhs, bwd),
                     info={"tensor": adj.info["tensor"], "hom": h, "lhs": lhs, "rhs": rhs})


# -- Morita equivalences ---------------------------------------------------------

@dataclass(frozen=True, eq=False)
class MoritaWitness:
    alg_a: Algebra
    alg_b: Algebra
    P: Module          # A,B-bimodule
    Q: Module          # B,A-bimodule
    pq: Mor            # P⊗Q -> A, descends to P⊗_B Q -> A
    qp: Mor            # Q⊗P -> B
    name: str = ""
    tensors: dict = field(default_factory=dict, compare=False)

    def tensor_pq(self) -> BalancedTensor:
        if "pq" not in self.tensors:
            self.tensors["pq"] = balanced_tensor(self.P, self.Q)
        return self.tensors["pq"]

    def tensor_qp(self) -> BalancedTensor:
        if "qp" not in self.tensors:
            self.tensors["qp"] = balanced_tensor(self.Q, self.P)
        return self.tensors["qp"]

    @property
    def iso_pq(self) -> Mor:
        return self.tensor_pq().coker.descend(self.pq)

    @property
    def iso_qp(self) -> Mor:
        return self.tensor_qp().coker.descend(self.qp)


def check_witness(w: MoritaWitness) -> Report:
    rep = Report(f"Morita witness {w.name}")
    P, Q, A, B = w.P, w.Q, w.alg_a, w.alg_b
    ok_types = P.left == A and P.right == B and Q.left == B and Q.right == A
    rep.add("bimodule typing", ok_types)
    if not ok_types:
        return rep
    rep.add("A self-induced", A.self_induced)
    rep.add("B self-induced", B.self_induced)
    rep.add("P smooth over A", is_smooth(P.forget_right()))
    rep.add("P smooth over B", is_smooth_right(P.forget_left()))
    rep.add("Q smooth over B", is_smooth(Q.forget_right()))
    rep.add("Q smooth over A", is_smooth_right(Q.forget_left()))
    for label, t, raw, alg in (("P⊗_B Q -> A", w.tensor_pq(), w.pq, A), ("Q⊗_A P -> B", w.tensor_qp(), w.qp, B)):
        try:
            iso = t.coker.descend(raw)
        except DescentError:
            rep.add(f"{label} descends", False)
            continue
        rep.add(f"{label} is an isomorphism", iso.is_iso())
        rep.add(f"{label} is a bimodule map", is_module_map(iso, t.module, alg.regular))
    return rep


def _composite_smooth(first: Module, second: Module, iso: Mor, x: Module) -> tuple[Mor, Module]:
    """``first ⊗ (second ⊗ X) -> (first⊗second) ⊗ X -> R ⊗ X -> X``."""
    assoc, _ = triple_assoc(first, second, x)
    inner = balanced_tensor(first, second)
    lhs = balanced_tensor(inner.module, x)
    reg = x.left.regular
    target = balanced_tensor(reg, x)
    mid = balanced_tensor_mor(lhs, target, iso, identity(x.carrier))
    bm = target.coker.descend(x.act_left)
    yz = balanced_tensor(second, x)
    outer = balanced_tensor(first, yz.module)
    return bm @ mid @ assoc.inverse(), outer.module


def _composite_rough(first: Module, second: Module, iso: Mor, x: Module) -> tuple[Mor, Module]:
    """``X -> Hom(second, Hom(first, X))``, ``x -> (q -> (p -> iso(p⊗q)·x))``."""
    inner = balanced_tensor(first, second)
    raw = x.act_left @ tensor_mor(iso @ inner.proj, identity(x.carrier))  # (P⊗Q)⊗X -> X
    h1 = balanced_hom(first, x)
    g = h1.kernel.corestrict(curry(raw @ associator_inv(first.carrier, second.carrier, x.carrier)))
    h2 = balanced_hom(second, h1.module)
    out = h2.kernel.corestrict(curry(g))
    return out, h2.module


def verify_morita(w: MoritaWitness, smooth_a=(), smooth_b=(), rough_a=(), rough_b=()) -> Report:
    rep = Report(f"Morita equivalence {w.name}")
    rep.extend(check_witness(w), "witness: ")
    if not rep.passed:
        return rep
    P, Q = w.P, w.Q
    iso_pq, iso_qp = w.iso_pq, w.iso_qp
    for x in smooth_a:
        x = x.forget_right()
        f, src = _composite_smooth(P, Q, iso_pq, x)
        rep.add(f"P⊗_B(Q⊗_A {x.name}) ≅ {x.name}", f.is_iso() and is_module_map(f, src, x))
    for y in smooth_b:
        y = y.forget_right()
        f, src = _composite_smooth(Q, P, iso_qp, y)
        rep.add(f"Q⊗_A(P⊗_B {y.name}) ≅ {y.name}", f.is_iso() and is_module_map(f, src, y))
    for x in rough_a:
        x = x.forget_right()
        f, dst = _composite_rough(P, Q, iso_pq, x)
        rep.add(f"Hom_B(Q, Hom_A(P, {x.name})) ≅ {x.name}", f.is_iso() and is_module_map(f, x, dst))
    for y in rough_b:
        y = y.forget_right()
        f, dst = _composite_rough(Q, P, iso_qp, y)
        rep.add(f"Hom_A(P, Hom_B(Q, {y.name})) ≅ {y.name}", f.is_iso() and is_module_map(f, y, dst))
        b, src, tgt = rough_morita_smooth(w, y)
        ok = b.is_iso() and is_module_map(b, src, tgt)
        rep.add(f"Rough_A(P⊗_B Smooth_B({y.name})) ≅ Hom_B(Q, {y.name})", ok)
    xs = [x.forget_right() for x in smooth_a]
    for i, x in enumerate(xs):
        for y in xs[i:]:
            d1 = module_maps(x, y).obj.dim
            tx, ty = balanced_tensor(Q, x), balanced_tensor(Q, y)
            d2 = module_maps(tx.module.forget_right(), ty.module.forget_right()).obj.dim
            rep.add(f"dim C_A({x.name},{y.name}) = dim C_B(Q⊗{x.name}, Q⊗{y.name})", d1 == d2, dims=[d1, d2])
    return rep


def rough_morita_smooth(w: MoritaWitness, x: Module) -> tuple[Mor, Module, Module]:
    """``Hom_B(Q, X) -> Rough_A(P ⊗_B Smooth_B(X))``, ``g -> (P ⊗_B (Smooth(g)∘bar_mu_Q⁻¹))∘iso⁻¹``."""
    P, Q = w.P, w.Q
    x = x.forget_right()
    sx = smoothening(x)
    qb = Q.forget_right()
    sq = smoothening(qb)
    inv_q = sq.bar_mu.inverse()
    pq = w.tensor_pq()
    ps = balanced_tensor(P, sx.module)
    inv_pq = w.iso_pq.inverse()
    h = balanced_hom(Q, x)
    rough = roughening(ps.module)

    def fn(g: Mor) -> Mor:
        k = smoothen_mor(g, qb, x) @ inv_q  # Q -> Smooth_B(X)
        return balanced_tensor_mor(pq, ps, identity(P.carrier), k) @ inv_pq

    return kernel_map(h.kernel, rough.hom.kernel, fn), h.module, rough.module


# -- homomorphisms ------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class InducedBimodules:
    f: Mor
    alg_a: Algebra
    alg_b: Algebra
    ab: Module  # B as an A,B-bimodule
    ba: Module  # B as a B,A-bimodule


def induced_bimodules(f: Mor, a: Algebra, b: Algebra) -> InducedBimodules:
    if not is_algebra_hom(f, a, b):
        raise AxiomError("homomorphism", "f is not multiplicative")
    ab = pullback(b.regular, f, a).renamed(f"{b.name}_f")
    ba = pullback_right(b.regular, f, a).renamed(f"f{b.name}")
    return InducedBimodules(f, a, b, ab, ba)


def hom_induced_functors(f: Mor, a: Algebra, b: Algebra,
                         samples_a=(), samples_b=()) -> Report:
    """The two adjoint pairs between smooth modules induced by ``f: A -> B``.

    First pair: ``X -> Smooth_A(f*X)`` and ``Y -> Smooth_B(Hom_A(A⊗_A B, Y))``;
    second pair: ``Y -> B⊗_A Y`` and ``X -> Smooth_A(Hom_B(B⊗_A A, X))``.
    """
    ib = induced_bimodules(f, a, b)
    rep = Report(f"functors induced by a homomorphism {a.name} -> {b.name}")
    if not (a.self_induced and b.self_induced):
        rep.add("both algebras self-induced", False)
        return rep
    m1 = smoothening(ib.ab)          # A⊗_A B, an A,B-bimodule
    m2 = right_smoothening(ib.ba)    # B⊗_A A, a B,A-bimodule
    M1, M2 = m1.module, m2.module
    for x in samples_b:
        x = x.forget_right()
        fx = pullback(x, f, a)
        sfx = smoothening(fx).module
        iso = _pullback_tensor_iso(ib, x)
        rep.add(f"Smooth_A(f*{x.name}) ≅ (A⊗_A B)⊗_B {x.name}", iso.is_iso())
        for y in samples_a:
            y = y.forget_right()
            b1 = _smoothened_bijection(M1, x, y)
            ok = b1.verify()
            d = module_maps(sfx, y).obj.dim
            rep.add(f"pair 1 on ({x.name}, {y.name})", ok and d == b1.dims[0], dims=[d, *b1.dims])
    for y in samples_a:
        y = y.forget_right()
        by = balanced_tensor(ib.ba, y).module
        for x in samples_b:
            x = x.forget_right()
            b2 = _smoothened_bijection(M2, y, x)
            ok = b2.verify()
            d = module_maps(by, x).obj.dim
            rep.add(f"pair 2 on ({y.name}, {x.name})", ok and d == b2.dims[0], dims=[d, *b2.dims])
    left_smooth = is_smooth(ib.ab.forget_right())
    right_smooth = is_smooth_right(ib.ba.forget_left())
    rep.info.update(B_smooth_left_over_A=left_smooth, B_smooth_right_over_A=right_smooth)
    if left_smooth and right_smooth:
        for x in samples_b:
            x = x.forget_right()
            fx = pullback(x, f, a)
            if is_smooth(x):
                rep.add(f"f* keeps {x.name} smooth", is_smooth(fx))
            if is_rough(x):
                rep.add(f"f* keeps {x.name} rough", is_rough(fx))
    return rep


def _pullback_tensor_iso(ib: InducedBimodules, x: Module) -> Mor:
    """``(A⊗_A B)⊗_B X -> A⊗_A (B⊗_B X) -> A⊗_A f*X``."""
    a = ib.alg_a
    assoc, _ = triple_assoc(a.regular, ib.ab, x)
    t = balanced_tensor(ib.ab, x)
    fx = pullback(x, ib.f, a)
    bm = t.coker.descend(x.act_left)
    return smoothen_mor(bm, t.module, fx) @ assoc


# -- functors given by tables ----------------------------------------------------------

class NotRepresentable(Exception):
    def __init__(self, cell: str, detail: dict | None = None):
        super().__init__(f"functor is not a tensor functor: {cell}")
        self.cell = cell
        self.detail = detail or {}


@dataclass
class FunctorTable:
    """A functor on finitely many smooth ``A``-modules.

    ``regular`` is ``F(A)`` and ``right_mult`` the map ``F(A)⊗A -> F(A)``
    obtained from ``F(μ)``.  Each entry is ``(X, F(X), φ_X)`` with
    ``φ_X: F(A)⊗X -> F(X)`` the image of the action of ``X``.  Morphism
    entries are ``(i, j, f, F(f))`` between entries ``i`` and ``j``.
    """

    source: Algebra
    regular: Module
    right_mult: Mor
    entries: list = field(default_factory=list)
    morphisms: list = field(default_factory=list)


def bimodule_of_tabulated_functor(t: FunctorTable) -> Module:
    """Recover ``M = F(A)`` with its right action, or raise :class:`NotRepresentable`."""
    a = t.source
    if not a.self_induced:
        raise NotRepresentable("source algebra is not self-induced")
    fa = t.regular
    try:
        m = Module(fa.carrier, fa.left, fa.act_left, a, t.right_mult, name=f"F({a.name})")
    except AxiomError as e:
        raise NotRepresentable(f"right action: {e.law}") from e
    for k, (x, fx, phi) in enumerate(t.entries):
        tx = balanced_tensor(m, x)
        try:
            cmp = tx.coker.descend(phi)
        except DescentError:
            raise NotRepresentable(f"entry {k}: comparison does not descend", {"module": x.name})
        if not cmp.is_iso():
            raise NotRepresentable(f"entry {k}: M⊗_A X -> F(X) is not invertible", {"module": x.name})
        if not is_module_map(cmp, tx.module.forget_right(), fx.forget_right()):
            raise NotRepresentable(f"entry {k}: comparison is not linear", {"module": x.name})
    for i, j, f, ff in t.morphisms:
        x, fx, phi_x = t.entries[i]
        y, fy, phi_y = t.entries[j]
        if ff @ phi_x != phi_y @ tensor_mor(identity(m.carrier), f):
            raise NotRepresentable(f"morphism {i}->{j}: comparison is not natural")
    return m


def tabulate_tensor_functor(m: Module, xs) -> FunctorTable:
    """Tabulate ``X -> M ⊗_A X`` on ``A`` and the given smooth modules."""
    a = m.right
    reg = a.regular.forget_right()
    tr = balanced_tensor(m, reg)
    fa = tr.module
    M, A = m.carrier, a.carrier
    # (m⊗a)⊗b -> m⊗ab, read through the section of M ⊗_A A
    right_mult = tr.proj @ tensor_mor(identity(M), a.mu) @ associator(M, A, A) @ tensor_mor(tr.section, identity(A))
    entries = []
    for x in xs:
        x = x.forget_right()
        tx = balanced_tensor(m, x)
        phi = (tx.proj @ tensor_mor(identity(M), x.act_left) @ associator(M, A, x.carrier)
               @ tensor_mor(tr.section, identity(x.carrier)))
        entries.append((x, tx.module, phi))
    return FunctorTable(a, fa.forget_right(), right_mult, entries)


def identity_functor_table(a: Algebra, xs) -> FunctorTable:
    reg = a.regular
    entries = [(x.forget_right(), x.forget_right(), x.act_left) for x in xs]
    return FunctorTable(a, reg.forget_right(), a.mu, entries)


# -- standard witnesses ----------------------------------------------------------------

def pairing_witness(pa) -> MoritaWitness:
    """``P = V``, ``Q = W`` between a pairing algebra and ``𝟙``."""
    P, Q = pa.P, pa.Q
    pq = identity(pa.algebra.carrier).retag(dom=tensor_obj(pa.V, pa.W))
    return MoritaWitness(pa.algebra, P.right, P, Q, pq, pa.b, name=f"{pa.spec.label} ~ 𝟙")


def matrix_witness(n: int) -> MoritaWitness:
    """Column and row vectors between ``M_n`` and ``𝟙``."""
    a = matrix_algebra(n)
    k = unit_algebra()
    col, row = column_module(a, n), row_module(a, n)
    P = Module(col.carrier, a, col.act_left, k, right_unitor(col.carrier), name=col.name)
    Q = Module(row.carrier, k, left_unitor(row.carrier), a, row.act_right, name=row.name)
    pq = Mor(tensor_obj(P.carrier, Q.carrier), a.carrier, Matrix.identity(n * n))
    qp = Mor(tensor_obj(Q.carrier, P.carrier), UNIT,
             Matrix.from_sparse(1, n * n, {(0, i * n + i): 1 for i in range(n)}))
    return MoritaWitness(a, k, P, Q, pq, qp, name=f"M{n} ~ 𝟙")
