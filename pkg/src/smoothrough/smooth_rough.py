"""Smoothening and roughening of modules over a self-induced algebra.

``Smooth(X) = A ⊗_A X`` comes with ``bar_mu_X: Smooth(X) -> X`` (the
descended action) and ``Rough(X) = Hom_A(A, X)`` with
``bar_mu†_X: X -> Rough(X)`` (the curried action).  A module is smooth or
rough when the respective map is invertible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import (
    Algebra, Module, check_unital_module, detect_unit, is_algebra_hom, is_module_map,
    left_regular, opposite, right_as_left_op, tensor_with_object,
)
from .balanced import (
    BalancedHom, BalancedTensor, Bijection, DescentError, adjunction_tensor_hom,
    balanced_hom, balanced_relation, balanced_tensor, between_cokernels, between_kernels,
    kernel_map, left_linearity, module_maps,
)
from .category import (
    UNIT, Mor, Obj, associator_inv, composition_map, curry, element, evaluation, hom_lift,
    hom_obj, identity, left_unitor_inv, postcompose_map, precompose_map, tensor_mor, tensor_obj,
)
from .linalg import Matrix, hstack_all, rank
from .report import Report


class NotSelfInduced(ValueError):
    """Smoothness and roughness are only defined over self-induced algebras."""


def _require_left(x: Module) -> Algebra:
    if x.left is None:
        raise ValueError(f"{x!r} has no left action")
    return x.left


# -- the two canonical maps ----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Smoothening:
    source: Module
    tensor: BalancedTensor
    bar_mu: Mor

    @property
    def module(self) -> Module:
        return self.tensor.module


@dataclass(frozen=True, eq=False)
class Roughening:
    source: Module
    hom: BalancedHom
    bar_mu_dagger: Mor

    @property
    def module(self) -> Module:
        return self.hom.module


@lru_cache(maxsize=2048)
def smoothening(x: Module) -> Smoothening:
    a = _require_left(x)
    t = balanced_tensor(a.regular, x, name=f"S({x.name})")
    bm = t.coker.descend(x.act_left)
    return Smoothening(x, t, bm)


@lru_cache(maxsize=2048)
def roughening(x: Module) -> Roughening:
    a = _require_left(x)
    h = balanced_hom(a.regular, x, name=f"R({x.name})")
    bmd = h.kernel.corestrict(curry(x.act_left))
    return Roughening(x, h, bmd)


def bar_mu(x: Module) -> Mor:
    """``A ⊗_A X -> X`` induced by the action."""
    return smoothening(x).bar_mu


def bar_mu_dagger(x: Module) -> Mor:
    """``X -> Hom_A(A, X)``, ``x -> (a -> a·x)``."""
    return roughening(x).bar_mu_dagger


def is_self_induced(a: Algebra) -> bool:
    return bar_mu(left_regular(a)).is_iso()


def _self_induced_over(x: Module) -> Algebra:
    a = _require_left(x)
    if not a.self_induced:
        raise NotSelfInduced(f"algebra {a.name or a.carrier} is not self-induced")
    return a


def is_smooth(x: Module) -> bool:
    _self_induced_over(x)
    return bar_mu(x).is_iso()


def is_rough(x: Module) -> bool:
    _self_induced_over(x)
    return bar_mu_dagger(x).is_iso()


def is_smooth_right(x: Module) -> bool:
    """Smoothness of a right module, transported to a left module over the opposite algebra."""
    return is_smooth(right_as_left_op(x))


def is_rough_right(x: Module) -> bool:
    return is_rough(right_as_left_op(x))


def smoothen(x: Module) -> tuple[Module, Mor]:
    _self_induced_over(x)
    s = smoothening(x)
    return s.module, s.bar_mu


def roughen(x: Module) -> tuple[Module, Mor]:
    _self_induced_over(x)
    r = roughening(x)
    return r.module, r.bar_mu_dagger


def smoothen_mor(f: Mor, x: Module, y: Module) -> Mor:
    """``Smooth(f) = A ⊗_A f``."""
    if not is_module_map(f, x.forget_right(), y.forget_right()):
        raise DescentError("not an A-module map")
    sx, sy = smoothening(x), smoothening(y)
    return between_cokernels(sx.tensor.coker, sy.tensor.coker,
                             tensor_mor(identity(x.left.carrier), f))


def roughen_mor(f: Mor, x: Module, y: Module) -> Mor:
    """``Rough(f) = Hom_A(A, f)``."""
    if not is_module_map(f, x.forget_right(), y.forget_right()):
        raise DescentError("not an A-module map")
    rx, ry = roughening(x), roughening(y)
    return between_kernels(rx.hom.kernel, ry.hom.kernel, postcompose_map(f, x.left.carrier))


def smooth_rough_report(a: Algebra, modules: list[Module]) -> Report:
    rep = Report(f"smooth/rough {a.name or a.carrier}")
    si = is_self_induced(a)
    rep.info["self_induced"] = si
    rows = []
    for m in modules:
        s, r = smoothening(m), roughening(m)
        row = {"module": m.name, "dim": m.dim,
               "smooth_dim": s.module.dim, "rough_dim": r.module.dim}
        if si:
            row.update(smooth=s.bar_mu.is_iso(), rough=r.bar_mu_dagger.is_iso())
        rows.append(row)
        rep.add(f"{m.name}: bar_mu is A-linear", is_module_map(s.bar_mu, s.module.forget_right(), m.forget_right()))
        rep.add(f"{m.name}: bar_mu† is A-linear", is_module_map(r.bar_mu_dagger, m.forget_right(), r.module.forget_right()))
    rep.info["modules"] = rows
    return rep


# -- the main diagram ------------------------------------------------------------

def _post(k: Mor):
    return lambda f: k @ f


def _pre(h: Mor):
    return lambda f: f @ h


def theorem_check(x: Module, y: Module | None = None) -> Report:
    """Every cell, iso and adjunction of the smoothening/roughening diagram for ``X`` (and ``Y``)."""
    a = _self_induced_over(x)
    x = x.forget_right()
    y = x if y is None else y.forget_right()
    rep = Report(f"smooth/rough diagram for {x.name}" + ("" if y is x else f", {y.name}"))

    S, R = smoothening, roughening
    sx, rx = S(x), R(x)
    SX, RX = sx.module, rx.module
    ssx, rsx, srx, rrx = S(SX), R(SX), S(RX), R(RX)
    bm, bmd = sx.bar_mu, rx.bar_mu_dagger
    arrows = {
        "bar_mu_SX": ssx.bar_mu,
        "bar_mu†_SX": rsx.bar_mu_dagger,
        "bar_mu_X": bm,
        "bar_mu†_X": bmd,
        "bar_mu_RX": srx.bar_mu,
        "bar_mu†_RX": rrx.bar_mu_dagger,
        "S(bar_mu_X)": smoothen_mor(bm, SX, x),
        "R(bar_mu_X)": roughen_mor(bm, SX, x),
        "S(bar_mu†_X)": smoothen_mor(bmd, x, RX),
        "R(bar_mu†_X)": roughen_mor(bmd, x, RX),
    }
    rep.info["dims"] = {"X": x.dim, "S(X)": SX.dim, "R(X)": RX.dim, "SS(X)": ssx.module.dim,
                        "RS(X)": rsx.module.dim, "SR(X)": srx.module.dim, "RR(X)": rrx.module.dim}

    # the six regions of the diagram
    rep.equal("cell: bar_mu_SX = S(bar_mu_X)", arrows["bar_mu_SX"], arrows["S(bar_mu_X)"])
    rep.equal("cell: S(X) = S(X) then bar_mu_X", bm @ identity(SX.carrier), bm)
    rep.equal("cell: R(bar_mu_X)∘bar_mu†_SX = bar_mu†_X∘bar_mu_X",
              arrows["R(bar_mu_X)"] @ arrows["bar_mu†_SX"], bmd @ bm)
    rep.equal("cell: bar_mu†_X∘bar_mu_X = bar_mu_RX∘S(bar_mu†_X)",
              bmd @ bm, arrows["bar_mu_RX"] @ arrows["S(bar_mu†_X)"])
    rep.equal("cell: bar_mu†_X then R(X) = R(X)", identity(RX.carrier) @ bmd, bmd)
    rep.equal("cell: R(bar_mu†_X) = bar_mu†_RX", arrows["R(bar_mu†_X)"], arrows["bar_mu†_RX"])

    for name in ("bar_mu_SX", "S(bar_mu_X)", "S(bar_mu†_X)", "R(bar_mu_X)", "R(bar_mu†_X)", "bar_mu†_RX"):
        rep.add(f"iso: {name}", arrows[name].is_iso())
    rep.add("S(X) is smooth", ssx.bar_mu.is_iso())
    rep.add("R(X) is rough", rrx.bar_mu_dagger.is_iso())

    for b in theorem_adjunctions(x, y):
        b.verify(rep)
    return rep


def theorem_adjunctions(x: Module, y: Module) -> list[Bijection]:
    """The four bijections between spaces of module maps.

    1. ``C_A(S X, Y) ≅ C_A(X, R Y)`` (smoothening left adjoint to roughening).
    2. ``C_A(X', S Y) ≅ C_A(X', Y)`` by composing with ``bar_mu_Y``, for smooth ``X' = S X``.
    3. ``C_A(R X, Y') ≅ C_A(X, Y')`` by precomposing ``bar_mu†_X``, for rough ``Y' = R Y``.
    4. ``C_A(X, R S Y) ≅ C_A(X, R Y)`` by composing with ``R(bar_mu_Y)``; checked
       to agree with the composite of 1 (for ``S Y``), 2 and 1 (for ``Y``) inverted.
    """
    a = x.left
    out = []
    sx, sy, ry = smoothening(x), smoothening(y), roughening(y)
    adj = adjunction_tensor_hom(a.regular, x, y, t=sx.tensor, h=ry.hom)
    adj.name = "adjunction: Smooth ⊣ Rough"
    out.append(adj)

    # 2: X' = S(X) smooth
    xs = sx.module
    sxs = smoothening(xs)
    lhs, rhs = module_maps(xs, sy.module), module_maps(xs, y)
    inv_bm = sxs.bar_mu.inverse()
    fwd = kernel_map(lhs, rhs, _post(sy.bar_mu))
    bwd = kernel_map(rhs, lhs, lambda g: smoothen_mor(g, xs, y) @ inv_bm)
    out.append(Bijection("adjunction: Smooth right adjoint to the smooth inclusion", fwd, bwd))

    # 3: Y' = R(Y) rough
    yr = ry.module
    rx, ryr = roughening(x), roughening(yr)
    lhs, rhs = module_maps(rx.module, yr), module_maps(x, yr)
    inv_bmd = ryr.bar_mu_dagger.inverse()
    fwd = kernel_map(lhs, rhs, _pre(rx.bar_mu_dagger))
    bwd = kernel_map(rhs, lhs, lambda f: inv_bmd @ roughen_mor(f, x, yr))
    out.append(Bijection("adjunction: Rough left adjoint to the rough inclusion", fwd, bwd))

    # 4: Yoneda step R S ≅ R, via the adjunctions above
    rsy = roughening(sy.module)
    r_bm = roughen_mor(sy.bar_mu, sy.module, y)
    lhs, rhs = module_maps(x, rsy.module), module_maps(x, ry.module)
    fwd = kernel_map(lhs, rhs, _post(r_bm))
    bwd = kernel_map(rhs, lhs, _post(r_bm.inverse()))
    chain_s = adjunction_tensor_hom(a.regular, x, sy.module, t=sx.tensor, h=rsy.hom)
    post_bm = kernel_map(module_maps(sx.module, sy.module), module_maps(sx.module, y), _post(sy.bar_mu))
    chain = adj.forward @ post_bm @ chain_s.backward
    b4 = Bijection("adjunction: Rough∘Smooth ≅ Rough on maps out of X", fwd, bwd,
                   info={"agrees_with_chain": chain == fwd})
    out.append(b4)
    return out


def theorem_adjunction_report(x: Module, y: Module) -> Report:
    rep = Report(f"adjunctions {x.name}, {y.name}")
    bs = theorem_adjunctions(x.forget_right(), y.forget_right())
    for b in bs:
        b.verify(rep)
    rep.add("Rough∘Smooth step agrees with the adjunction chain", bs[3].info["agrees_with_chain"])
    return rep


# -- the unital case -----------------------------------------------------------------

def _s_map(a: Algebra, x: Obj) -> Mor:
    """``s_X = (η ⊗ X)∘λ⁻¹ : X -> A⊗X``."""
    return tensor_mor(a.unit, identity(x)) @ left_unitor_inv(x)


def _s_prime(a: Algebra, x: Obj) -> Mor:
    """``s'_X: Hom(A, X) -> X``, ``f -> f(1)``."""
    p = precompose_map(a.unit, x)  # Hom(A,X) -> Hom(𝟙,X)
    return p.retag(cod=x)


def unital_homotopy_check(x: Module) -> Report:
    """The two contracting homotopies of a unital module, as exact equations."""
    a = _require_left(x)
    if a.unit is None:
        raise ValueError("algebra is not unital")
    X, A = x.carrier, a.carrier
    rep = Report(f"unital homotopies for {x.name}")
    rep.add("module is unital", check_unital_module(x))
    ax = tensor_obj(A, X)
    left_x = x.forget_right()
    b1 = balanced_relation(a.regular.forget_left(), left_x)  # (A⊗A)⊗X -> A⊗X
    s_x = _s_map(a, X)
    s_ax = _s_map(a, ax)  # A⊗X -> A⊗(A⊗X)
    lhs = b1 @ associator_inv(A, A, X) @ s_ax + s_x @ x.act_left
    rep.equal("b'∘s_(A⊗X) + s_X∘μ_X = Id", lhs, identity(ax))

    c = left_linearity(a, a.mu, x.act_left)  # Hom(A,X) -> Hom(A⊗A,X)
    hx = hom_obj(A, X)
    s1 = _s_prime(a, X)
    s2 = _s_prime(a, hx) @ hom_lift(A, A, X)
    mu_dag = curry(x.act_left)
    rep.equal("s''∘b'† + μ_X†∘s' = Id", s2 @ c + mu_dag @ s1, identity(hx))
    return rep


def unital_equivalence_check(x: Module) -> Report:
    """Over a unital algebra: smooth ⇔ rough ⇔ unital."""
    a = _self_induced_over(x)
    rep = Report(f"unital case for {x.name}")
    sm, ro, un = is_smooth(x), is_rough(x), check_unital_module(x)
    rep.info.update(smooth=sm, rough=ro, unital=un)
    rep.add("smooth ⇔ rough ⇔ unital", sm == ro == un)
    return rep


# -- multiplier algebras ---------------------------------------------------------

@dataclass(frozen=True, eq=False)
class MultiplierAlgebra:
    side: str
    algebra: Algebra
    canonical_map: Mor  # A -> M(A)
    base: Algebra
    report: Report = field(default_factory=lambda: Report("multipliers"))


def _left_multipliers(a: Algebra) -> tuple[Algebra, Mor, BalancedHom]:
    h = roughening(left_regular(a)).hom
    k = h.kernel
    A = a.carrier
    M = k.obj
    # f·g := g∘f, so that a -> (x -> x·a) is multiplicative
    comp = composition_map(A, A, A)
    mu = k.retr @ comp @ tensor_mor(k.incl, k.incl)
    unit = k.corestrict(Mor(UNIT, hom_obj(A, A), element(identity(A))))
    return Algebra(M, mu, unit, name=f"M_l({a.name})"), bar_mu_dagger(left_regular(a)), h


def multiplier_left(a: Algebra) -> MultiplierAlgebra:
    if not a.self_induced:
        raise NotSelfInduced("multipliers need a self-induced algebra")
    m, can, _ = _left_multipliers(a)
    rep = Report(f"left multipliers of {a.name or a.carrier}")
    rep.info.update(dim=m.dim, canonical_rank=rank(can.mat))
    rep.add("unital", m.unit is not None)
    rep.add("canonical map is multiplicative", is_algebra_hom(can, a, m))
    rep.equal("canonical map = bar_mu† of A", can, bar_mu_dagger(left_regular(a)))
    return MultiplierAlgebra("left", m, can, a, rep)


def multiplier_right(a: Algebra) -> MultiplierAlgebra:
    """Right module endomorphisms of ``A``, computed as the opposite of ``M_l(A^op)``."""
    if not a.self_induced:
        raise NotSelfInduced("multipliers need a self-induced algebra")
    ml, can, _ = _left_multipliers(opposite(a))
    m = opposite(ml)
    m = Algebra(m.carrier, m.mu, m.unit, name=f"M_r({a.name})")
    rep = Report(f"right multipliers of {a.name or a.carrier}")
    rep.info.update(dim=m.dim, canonical_rank=rank(can.mat))
    rep.add("unital", m.unit is not None)
    rep.add("canonical map is multiplicative", is_algebra_hom(can, a, m))
    return MultiplierAlgebra("right", m, can, a, rep)


def multiplier_module(a: Algebra) -> Module:
    """``M_l(A) = Hom_A(A, A)`` as a left ``A``-module."""
    return roughening(left_regular(a)).module


def evaluation_iso(a: Algebra, v: Obj | None = None) -> tuple[Mor, Smoothening, Module]:
    """``A ⊗_A (M_l(A)⊗V) -> A⊗V``, ``a⊗f⊗v -> f(a)⊗v`` (``V = 𝟙`` when omitted)."""
    A = a.carrier
    h = roughening(left_regular(a)).hom
    ml = multiplier_module(a)
    if v is None:
        x = ml
        target = left_regular(a)
        raw = evaluation(A, A) @ tensor_mor(identity(A), h.kernel.incl)
    else:
        x = tensor_with_object(ml, v)
        target = tensor_with_object(left_regular(a), v)
        M = ml.carrier
        raw = (tensor_mor(evaluation(A, A), identity(v))
               @ associator_inv(A, hom_obj(A, A), v)
               @ tensor_mor(identity(A), tensor_mor(h.kernel.incl, identity(v))))
        raw = raw.retag(dom=tensor_obj(A, tensor_obj(M, v)))
    s = smoothening(x)
    return s.tensor.coker.descend(raw), s, target


def smooth_of_multipliers(a: Algebra) -> Report:
    """``A ⊗_A M_l(A) ≅ A`` through evaluation."""
    iso, s, target = evaluation_iso(a)
    rep = Report("A ⊗_A M_l(A) ≅ A")
    rep.info.update(smooth_dim=s.module.dim, algebra_dim=a.dim)
    rep.add("A-linear", is_module_map(iso, s.module, target))
    rep.add("iso", iso.is_iso())
    return rep


def free_rough_check(a: Algebra, v: Obj) -> Report:
    """``Rough(M_l(A)⊗V) ≅ Rough Smooth(M_l(A)⊗V) ≅ Hom_A(A, A⊗V)``, plus a dimension comparison."""
    if not a.self_induced:
        raise NotSelfInduced("needs a self-induced algebra")
    rep = Report(f"free rough modules, dim V = {v.dim}")
    iso, s, target = evaluation_iso(a, v)
    x = s.source
    rep.add("evaluation A⊗_A(M_l(A)⊗V) -> A⊗V is an A-linear iso",
            iso.is_iso() and is_module_map(iso, s.module, target))
    r_bm = roughen_mor(s.bar_mu, s.module, x)
    r_ev = roughen_mor(iso, s.module, target)
    rep.add("Rough(bar_mu): Rough Smooth(M_l(A)⊗V) -> Rough(M_l(A)⊗V) iso", r_bm.is_iso())
    rep.add("Rough(ev): Rough Smooth(M_l(A)⊗V) -> Hom_A(A, A⊗V) iso", r_ev.is_iso())
    chain = r_ev @ r_bm.inverse()
    rep.add("composite Rough(M_l(A)⊗V) -> Hom_A(A, A⊗V) is A-linear",
            is_module_map(chain, roughening(x).module, roughening(target).module))
    ml_v = x.dim
    hom_free = roughening(target).module.dim
    rep.info.update({"dim M_l(A)⊗V": ml_v, "dim Hom_A(A, A⊗V)": hom_free,
                     "dim Rough(M_l(A)⊗V)": roughening(x).module.dim})
    rep.info["dimensions_differ"] = ml_v != hom_free
    return rep


def canonical_unit_converse(a: Algebra) -> bool | None:
    """If ``A`` is rough over itself it has a unit; ``None`` when not applicable."""
    if not a.self_induced:
        return None
    if not is_rough(left_regular(a)):
        return None
    return detect_unit(a) is not None


__all__ = [
    "NotSelfInduced", "Smoothening", "Roughening", "smoothening", "roughening", "bar_mu",
    "bar_mu_dagger", "is_self_induced", "is_smooth", "is_rough", "is_smooth_right",
    "is_rough_right", "smoothen", "roughen", "smoothen_mor", "roughen_mor",
    "smooth_rough_report", "theorem_check", "theorem_adjunctions", "theorem_adjunction_report",
    "unital_homotopy_check", "unital_equivalence_check", "MultiplierAlgebra", "multiplier_left",
    "multiplier_right", "multiplier_module", "evaluation_iso", "smooth_of_multipliers",
    "free_rough_check", "canonical_unit_converse",
]
