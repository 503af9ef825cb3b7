"""Algebras (semigroup objects) and left/right/bimodules over them.

Axioms are verified at construction time; invalid data raises
:class:`AxiomError` naming the failed law.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .category import (
    UNIT, Mor, Obj, TypeMismatch, associator, associator_inv, braiding, identity,
    injection, left_unitor, left_unitor_inv, projection, right_unitor, right_unitor_inv,
    sum_obj, tensor_mor, tensor_obj, zero_mor,
)
from .linalg import Matrix, NoSolution, solve, vstack_all
from .report import Check, Report, matrix_json


class AxiomError(ValueError):
    def __init__(self, law: str, message: str = "", detail: dict | None = None):
        super().__init__(f"{law}: {message}" if message else law)
        self.law = law
        self.detail = detail or {}


def _law(name: str, lhs: Mor, rhs: Mor) -> Check:
    ok = lhs == rhs
    detail = {} if ok else {"lhs": matrix_json(lhs.mat), "rhs": matrix_json(rhs.mat)}
    return Check(name, ok, detail)


def algebra_laws(carrier: Obj, mu: Mor, unit: Mor | None = None) -> list[Check]:
    aa = tensor_obj(carrier, carrier)
    if mu.dom != aa or mu.cod != carrier:
        return [Check("typing", False, {"expected": f"{aa} -> {carrier}", "got": f"{mu.dom} -> {mu.cod}"})]
    a = identity(carrier)
    checks = [
        Check("typing", True),
        _law("associativity", mu @ tensor_mor(mu, a), mu @ tensor_mor(a, mu) @ associator(carrier, carrier, carrier)),
    ]
    if unit is not None:
        if unit.dom != UNIT or unit.cod != carrier:
            return checks + [Check("unit typing", False)]
        checks.append(_law("left unit", mu @ tensor_mor(unit, a), left_unitor(carrier)))
        checks.append(_law("right unit", mu @ tensor_mor(a, unit), right_unitor(carrier)))
    return checks


@dataclass(frozen=True, eq=False)
class Algebra:
    carrier: Obj
    mu: Mor
    unit: Mor | None = None
    name: str = ""

    def __post_init__(self):
        for c in algebra_laws(self.carrier, self.mu, self.unit):
            if not c.passed:
                raise AxiomError(c.name, f"algebra {self.name or self.carrier}", c.detail)

    @cached_property
    def key(self) -> str:
        return self.carrier.key + ":" + self.mu.key

    def __eq__(self, other) -> bool:
        return isinstance(other, Algebra) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"Algebra({self.name or self.carrier}, dim={self.dim})"

    @property
    def dim(self) -> int:
        return self.carrier.dim

    @property
    def is_unital(self) -> bool:
        return self.unit is not None

    @cached_property
    def regular(self) -> "Module":
        """``A`` as an ``A,A``-bimodule."""
        return Module(self.carrier, self, self.mu, self, self.mu, name=self.name or str(self.carrier))

    @cached_property
    def self_induced(self) -> bool:
        # cached per instance; the computation lives with the smoothening code
        from .smooth_rough import bar_mu
        return bar_mu(self.regular).is_iso()


@dataclass(frozen=True, eq=False)
class Module:
    """An object with a left action ``A⊗X -> X`` and/or a right action ``X⊗B -> X``."""

    carrier: Obj
    left: Algebra | None = None
    act_left: Mor | None = None
    right: Algebra | None = None
    act_right: Mor | None = None
    name: str = ""

    def __post_init__(self):
        if (self.left is None) != (self.act_left is None) or (self.right is None) != (self.act_right is None):
            raise AxiomError("typing", "algebra and action must be given together")
        for c in module_laws(self):
            if not c.passed:
                raise AxiomError(c.name, f"module {self.name or self.carrier}", c.detail)

    @cached_property
    def key(self) -> str:
        parts = [self.carrier.key]
        for alg, act in ((self.left, self.act_left), (self.right, self.act_right)):
            parts.append(f"{alg.key}/{act.key}" if alg is not None else "-")
        return ":".join(parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Module) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        sides = "".join(s for s, a in (("L", self.left), ("R", self.right)) if a is not None)
        return f"Module({self.name or self.carrier}, dim={self.dim}, {sides or 'plain'})"

    @property
    def dim(self) -> int:
        return self.carrier.dim

    def forget_right(self) -> "Module":
        if self.right is None:
            return self
        return Module(self.carrier, self.left, self.act_left, name=self.name)

    def forget_left(self) -> "Module":
        if self.left is None:
            return self
        return Module(self.carrier, right=self.right, act_right=self.act_right, name=self.name)

    def renamed(self, name: str) -> "Module":
        return Module(self.carrier, self.left, self.act_left, self.right, self.act_right, name)


def module_laws(m: Module) -> list[Check]:
    x = m.carrier
    ix = identity(x)
    checks = []
    if m.left is not None:
        a = m.left.carrier
        act = m.act_left
        if act.dom != tensor_obj(a, x) or act.cod != x:
            return [Check("typing", False, {"left action": f"{act.dom} -> {act.cod}"})]
        checks.append(_law("left associativity",
                           act @ tensor_mor(m.left.mu, ix),
                           act @ tensor_mor(identity(a), act) @ associator(a, a, x)))
    if m.right is not None:
        b = m.right.carrier
        act = m.act_right
        if act.dom != tensor_obj(x, b) or act.cod != x:
            return [Check("typing", False, {"right action": f"{act.dom} -> {act.cod}"})]
        checks.append(_law("right associativity",
                           act @ tensor_mor(ix, m.right.mu),
                           act @ tensor_mor(act, identity(b)) @ associator_inv(x, b, b)))
    if m.left is not None and m.right is not None:
        a, b = m.left.carrier, m.right.carrier
        checks.append(_law("bimodule compatibility",
                           m.act_right @ tensor_mor(m.act_left, identity(b)),
                           m.act_left @ tensor_mor(identity(a), m.act_right) @ associator(a, x, b)))
    return checks


def check_algebra(a: Algebra) -> Report:
    r = Report(f"algebra {a.name or a.carrier}", algebra_laws(a.carrier, a.mu, a.unit))
    r.info.update(dim=a.dim, unital=a.is_unital)
    return r


def is_module_map(f: Mor, src: Module, dst: Module) -> bool:
    if f.dom != src.carrier or f.cod != dst.carrier:
        return False
    if src.left is not None and dst.left is not None:
        if f @ src.act_left != dst.act_left @ tensor_mor(identity(src.left.carrier), f):
            return False
    if src.right is not None and dst.right is not None:
        if f @ src.act_right != dst.act_right @ tensor_mor(f, identity(src.right.carrier)):
            return False
    return True


# -- units ----------------------------------------------------------------------

def detect_unit(a: Algebra) -> Mor | None:
    """Solve ``e·x = x = x·e`` for all basis ``x``; ``None`` when no unit exists."""
    n = a.dim
    if n == 0:
        return Mor(UNIT, a.carrier, Matrix.zeros(0, 1))
    mu = a.mu.mat
    blocks, rhs = [], []
    for j in range(n):
        # column i of each block is the product with basis element i in the unknown slot
        blocks.append(Matrix.from_rows([[mu[k, i * n + j] for i in range(n)] for k in range(n)]))
        blocks.append(Matrix.from_rows([[mu[k, j * n + i] for i in range(n)] for k in range(n)]))
        e_j = [1 if k == j else 0 for k in range(n)]
        rhs += e_j + e_j
    try:
        eta = solve(vstack_all(blocks, n), Matrix.column(rhs))
    except NoSolution:
        return None
    return Mor(UNIT, a.carrier, eta)


def forget_unit(a: Algebra) -> Algebra:
    return Algebra(a.carrier, a.mu, None, a.name)


def with_detected_unit(a: Algebra) -> Algebra:
    if a.unit is not None:
        return a
    eta = detect_unit(a)
    return a if eta is None else Algebra(a.carrier, a.mu, eta, a.name)


def check_unital_module(m: Module, side: str = "left") -> bool:
    if side == "left":
        alg, act = m.left, m.act_left
    else:
        alg, act = m.right, m.act_right
    if alg is None:
        raise ValueError(f"module has no {side} action")
    if alg.unit is None:
        raise ValueError("algebra is not unital")
    x = m.carrier
    if side == "left":
        return act @ tensor_mor(alg.unit, identity(x)) == left_unitor(x)
    return act @ tensor_mor(identity(x), alg.unit) == right_unitor(x)


# -- opposites ------------------------------------------------------------------

def opposite(a: Algebra) -> Algebra:
    name = a.name[:-3] if a.name.endswith("^op") else (a.name + "^op" if a.name else "")
    return Algebra(a.carrier, a.mu @ braiding(a.carrier, a.carrier), a.unit, name)


def right_as_left_op(m: Module) -> Module:
    """A right ``A``-module as a left ``A^op``-module (any left action is dropped)."""
    if m.right is None:
        raise ValueError("module has no right action")
    return Module(m.carrier, opposite(m.right), m.act_right @ braiding(m.right.carrier, m.carrier),
                  name=m.name)


def left_as_right_op(m: Module) -> Module:
    if m.left is None:
        raise ValueError("module has no left action")
    return Module(m.carrier, right=opposite(m.left),
                  act_right=m.act_left @ braiding(m.carrier, m.left.carrier), name=m.name)


def swap_sides(m: Module) -> Module:
    """An ``A,B``-bimodule as a ``B^op,A^op``-bimodule."""
    return Module(m.carrier,
                  opposite(m.right), m.act_right @ braiding(m.right.carrier, m.carrier),
                  opposite(m.left), m.act_left @ braiding(m.carrier, m.left.carrier),
                  name=m.name)


# -- standard constructions ---------------------------------------------------------

def unit_algebra() -> Algebra:
    return Algebra(UNIT, left_unitor(UNIT), identity(UNIT), "𝟙")


def trivial_module(x: Obj, name: str = "") -> Module:
    """Any object as a unital ``𝟙,𝟙``-bimodule via the unitors."""
    k = unit_algebra()
    return Module(x, k, left_unitor(x), k, right_unitor(x), name=name or str(x))


def left_regular(a: Algebra) -> Module:
    return a.regular.forget_right()


def zero_action_module(a: Algebra, x: Obj, name: str = "") -> Module:
    return Module(x, a, zero_mor(tensor_obj(a.carrier, x), x), name=name or f"0-action {x}")


def direct_sum(m: Module, n: Module, name: str = "") -> Module:
    if m.left != n.left or m.right != n.right:
        raise TypeMismatch("direct summands must be modules over the same algebras")
    x, y = m.carrier, n.carrier
    s = sum_obj(x, y)
    i0, i1, p0, p1 = injection(x, y, 0), injection(x, y, 1), projection(x, y, 0), projection(x, y, 1)
    act_l = act_r = None
    if m.left is not None:
        ia = identity(m.left.carrier)
        act_l = i0 @ m.act_left @ tensor_mor(ia, p0) + i1 @ n.act_left @ tensor_mor(ia, p1)
    if m.right is not None:
        ib = identity(m.right.carrier)
        act_r = i0 @ m.act_right @ tensor_mor(p0, ib) + i1 @ n.act_right @ tensor_mor(p1, ib)
    return Module(s, m.left, act_l, m.right, act_r, name=name or f"{m.name}⊕{n.name}")


def tensor_with_object(m: Module, v: Obj, name: str = "") -> Module:
    """``X ⊗ V`` with ``A`` acting on ``X`` (left action only)."""
    if m.left is None:
        raise ValueError("needs a left module")
    a, x = m.left.carrier, m.carrier
    act = tensor_mor(m.act_left, identity(v)) @ associator_inv(a, x, v)
    return Module(tensor_obj(x, v), m.left, act, name=name or f"{m.name}⊗{v}")


def object_tensor_module(v: Obj, m: Module, name: str = "") -> Module:
    """``V ⊗ Y`` with ``B`` acting on ``Y`` from the right (right action only)."""
    if m.right is None:
        raise ValueError("needs a right module")
    b, y = m.right.carrier, m.carrier
    act = tensor_mor(identity(v), m.act_right) @ associator(v, y, b)
    return Module(tensor_obj(v, y), right=m.right, act_right=act, name=name or f"{v}⊗{m.name}")


# -- homomorphisms ---------------------------------------------------------------

def is_algebra_hom(f: Mor, a: Algebra, b: Algebra) -> bool:
    if f.dom != a.carrier or f.cod != b.carrier:
        return False
    return f @ a.mu == b.mu @ tensor_mor(f, f)


def preserves_unit(f: Mor, a: Algebra, b: Algebra) -> bool:
    if a.unit is None or b.unit is None:
        return False
    return f @ a.unit == b.unit


def pullback(m: Module, f: Mor, a: Algebra) -> Module:
    """Restrict the left action of ``m`` along ``f: A -> B``."""
    if m.left is None or not is_algebra_hom(f, a, m.left):
        raise AxiomError("homomorphism", "f is not multiplicative into the acting algebra")
    act = m.act_left @ tensor_mor(f, identity(m.carrier))
    return Module(m.carrier, a, act, m.right, m.act_right, name=f"f*{m.name}")


def pullback_right(m: Module, f: Mor, a: Algebra) -> Module:
    if m.right is None or not is_algebra_hom(f, a, m.right):
        raise AxiomError("homomorphism", "f is not multiplicative into the acting algebra")
    act = m.act_right @ tensor_mor(identity(m.carrier), f)
    return Module(m.carrier, m.left, m.act_left, a, act, name=f"{m.name}f*")
