"""Exhaustive checks of the symmetric monoidal closed structure on small objects."""

from __future__ import annotations

from itertools import product

from .category import (
    UNIT, Mor, associator, associator_inv, atom, braiding, composition_map, curry, element, evaluation,
    from_element, hom_lift, hom_obj, identity, inflation_map, left_unitor, right_unitor,
    tensor_mor, tensor_obj, uncurry,
)
from .linalg import Matrix
from .report import Report


def sample_objects(dims=(1, 2, 3)) -> list:
    return [atom(f"E{d}", d) for d in dims]


def generic_mor(dom, cod, seed: int = 0) -> Mor:
    """A fixed dense map with small integer entries (no special structure)."""
    rows = [[((i * 7 + j * 3 + seed * 5) % 11) - 5 for j in range(dom.dim)] for i in range(cod.dim)]
    return Mor(dom, cod, Matrix.from_rows(rows, dom.dim))


def coherence_report(dims=(1, 2, 3)) -> Report:
    rep = Report("monoidal coherence")
    objs = sample_objects(dims)
    ok_pent = ok_tri = ok_hex1 = ok_hex2 = ok_sym = True
    n_pent = 0
    for a, b, c, d in product(objs, repeat=4):
        lhs = associator(a, b, tensor_obj(c, d)) @ associator(tensor_obj(a, b), c, d)
        rhs = (tensor_mor(identity(a), associator(b, c, d))
               @ associator(a, tensor_obj(b, c), d)
               @ tensor_mor(associator(a, b, c), identity(d)))
        ok_pent &= lhs == rhs
        n_pent += 1
    for a, b in product(objs, repeat=2):
        lhs = tensor_mor(identity(a), left_unitor(b)) @ associator(a, UNIT, b)
        ok_tri &= lhs == tensor_mor(right_unitor(a), identity(b))
        ok_sym &= braiding(b, a) @ braiding(a, b) == identity(tensor_obj(a, b))
    for a, b, c in product(objs, repeat=3):
        # α∘γ_{A,B⊗C}∘α = (B⊗γ_{A,C})∘α∘(γ_{A,B}⊗C)
        lhs = associator(b, c, a) @ braiding(a, tensor_obj(b, c)) @ associator(a, b, c)
        rhs = (tensor_mor(identity(b), braiding(a, c)) @ associator(b, a, c)
               @ tensor_mor(braiding(a, b), identity(c)))
        ok_hex1 &= lhs == rhs
        lhs = associator_inv(c, a, b) @ braiding(tensor_obj(a, b), c) @ associator_inv(a, b, c)
        rhs = (tensor_mor(braiding(a, c), identity(b)) @ associator_inv(a, c, b)
               @ tensor_mor(identity(a), braiding(b, c)))
        ok_hex2 &= lhs == rhs
    rep.info["tuples"] = n_pent
    rep.add("pentagon", ok_pent)
    rep.add("triangle", ok_tri)
    rep.add("hexagon", ok_hex1)
    rep.add("inverse hexagon", ok_hex2)
    rep.add("symmetry", ok_sym)
    return rep


def closedness_report(dims=(1, 2, 3)) -> Report:
    rep = Report("closed structure")
    objs = sample_objects(dims)
    res = dict.fromkeys(["curry/uncurry inverse", "evaluation law", "hom_lift invertible",
                         "hom_lift agrees with curry", "composition is matrix product",
                         "composition via evaluation", "inflation is Id⊗f"], True)
    for k, (a, b, c) in enumerate(product(objs, repeat=3)):
        f = generic_mor(tensor_obj(a, b), c, k)
        g = generic_mor(b, hom_obj(a, c), k + 1)
        cf = curry(f)
        res["curry/uncurry inverse"] &= uncurry(cf) == f and curry(uncurry(g)) == g
        res["evaluation law"] &= evaluation(a, c) @ tensor_mor(identity(a), cf) == f
        hl = hom_lift(a, b, c)
        res["hom_lift invertible"] &= hl.is_iso()
        res["hom_lift agrees with curry"] &= hl.mat @ element(f) == element(cf)
        # composition X=a, Y=b, Z=c
        p = generic_mor(a, b, k)
        q = generic_mor(b, c, k + 2)
        comp = composition_map(a, b, c)
        res["composition is matrix product"] &= comp.mat @ element(p).kron(element(q)) == element(q @ p)
        hxy, hyz = hom_obj(a, b), hom_obj(b, c)
        lhs = (evaluation(b, c) @ tensor_mor(evaluation(a, b), identity(hyz))
               @ associator_inv(a, hxy, hyz))
        rhs = evaluation(a, c) @ tensor_mor(identity(a), comp)
        res["composition via evaluation"] &= lhs == rhs
        infl = inflation_map(a, b, c)
        res["inflation is Id⊗f"] &= from_element(infl.mat @ element(p), tensor_obj(c, a), tensor_obj(c, b)) \
            == tensor_mor(identity(c), p)
    for name, ok in res.items():
        rep.add(name, ok)
    return rep
