from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from smoothrough.category import (
    UNIT, Mor, TypeMismatch, associator, atom, braiding, composition_map, curry, element, evaluation,
    from_element, hom_lift, hom_obj, identity, inflation_map, left_unitor, postcompose_map,
    precompose_map, tensor_mor, tensor_obj, uncurry,
)
from smoothrough.laws import closedness_report, coherence_report, generic_mor
from smoothrough.linalg import Matrix, rank

dims = st.integers(1, 3)
entries = st.integers(-2, 2)


def random_mor(data, dom, cod) -> Mor:
    return Mor(dom, cod, Matrix(cod.dim, dom.dim,
                                [[data.draw(entries) for _ in range(dom.dim)] for _ in range(cod.dim)]))


def basis(n: int, i: int) -> Matrix:
    return Matrix.column([int(k == i) for k in range(n)])


def test_tensor_dims_and_identity():
    a, b = atom("A", 2), atom("B", 3)
    assert tensor_obj(a, b).dim == 6
    assert tensor_mor(identity(a), identity(b)) == identity(tensor_obj(a, b))


def test_tensor_of_maps_on_basis():
    a, b = atom("A", 1), atom("B", 2)
    f = Mor(a, a, Matrix.from_rows([[2]]))
    g = Mor(b, b, Matrix.from_rows([[0, 1], [1, 0]]))
    t = tensor_mor(f, g)
    assert t.mat == Matrix.from_rows([[0, 2], [2, 0]])
    # oracle: (f⊗g)(e_i⊗e_j) = f(e_i)⊗g(e_j)
    for i, j in product(range(1), range(2)):
        lhs = t.mat @ basis(1, i).kron(basis(2, j))
        assert lhs == (f.mat @ basis(1, i)).kron(g.mat @ basis(2, j))


def test_braiding_examples():
    one, x = atom("L", 1), atom("X", 3)
    assert braiding(one, x).mat == Matrix.identity(3)
    a, b = atom("A", 2), atom("B", 2)
    g = braiding(a, b).mat
    for i, j in product(range(2), repeat=2):
        assert g @ basis(2, i).kron(basis(2, j)) == basis(2, j).kron(basis(2, i))
    perm = [max(range(4), key=lambda r: g[r, c]) for c in range(4)]
    assert perm == [0, 2, 1, 3]


def test_pentagon_2222():
    a = atom("A", 2)
    lhs = associator(a, a, tensor_obj(a, a)) @ associator(tensor_obj(a, a), a, a)
    rhs = (tensor_mor(identity(a), associator(a, a, a)) @ associator(a, tensor_obj(a, a), a)
           @ tensor_mor(associator(a, a, a), identity(a)))
    assert lhs == rhs


def test_type_tags_are_enforced():
    a, b = atom("A", 2), atom("B", 2)
    with pytest.raises(TypeMismatch):
        identity(a) @ identity(b)
    with pytest.raises(TypeMismatch):
        identity(tensor_obj(tensor_obj(a, a), a)) @ identity(tensor_obj(a, tensor_obj(a, a)))
    # the associator is the identity matrix but changes the tag
    assoc = associator(a, a, a)
    assert assoc.mat == Matrix.identity(8) and assoc.dom != assoc.cod


def test_hom_examples():
    a, b = atom("A", 2), atom("B", 3)
    assert hom_obj(a, b).dim == 6
    # Hom(𝟙, B) ≅ B through the curried left unitor
    c = curry(left_unitor(b))
    assert c.dom == b and c.cod == hom_obj(UNIT, b) and c.mat == Matrix.identity(3)
    assert curry(evaluation(a, b)) == identity(hom_obj(a, b))


def test_element_flattening():
    a, b = atom("A", 2), atom("B", 3)
    f = generic_mor(a, b, 1)
    v = element(f)
    for i, j in product(range(2), range(3)):
        assert v[i * 3 + j, 0] == f.mat[j, i]
    assert from_element(v, a, b) == f


def test_hom_lift_examples():
    one = atom("L", 1)
    assert hom_lift(one, one, one).mat == Matrix.identity(1)
    a = atom("A", 2)
    hl = hom_lift(a, a, a)
    n = hom_obj(tensor_obj(a, a), a).dim  # 2·2·2
    assert n == 8
    assert hl.mat.shape == (n, n) and rank(hl.mat) == n
    assert hl.inverse() @ hl == identity(hl.dom)


def test_composition_map_examples():
    a = atom("A", 2)
    one = atom("L", 1)
    s = composition_map(one, one, one)
    assert s.mat == Matrix.identity(1)
    comp = composition_map(a, a, a)
    for p, q in product(range(4), repeat=2):
        f = from_element(basis(4, p), a, a)
        g = from_element(basis(4, q), a, a)
        assert comp.mat @ element(f).kron(element(g)) == element(g @ f)
    g = generic_mor(a, a, 3)
    ide = element(identity(a))
    assert comp.mat @ ide.kron(element(g)) == element(g)


def test_inflation_examples():
    z, x = atom("Z", 2), atom("X", 1)
    f = Mor(x, x, Matrix.from_rows([[5]]))
    img = inflation_map(x, x, z).mat @ element(f)
    assert from_element(img, tensor_obj(z, x), tensor_obj(z, x)).mat == Matrix.from_rows([[5, 0], [0, 5]])
    y = atom("Y", 3)
    assert inflation_map(y, y, UNIT).mat == Matrix.identity(9)
    assert inflation_map(y, y, z).mat @ element(identity(y)) == element(identity(tensor_obj(z, y)))


def test_coherence_suite():
    rep = coherence_report((1, 2, 3))
    assert rep.passed, str(rep)
    assert rep.info["tuples"] == 81


def test_closedness_suite():
    rep = closedness_report((1, 2, 3))
    assert rep.passed, str(rep)


@given(dims, dims, dims, st.data())
@settings(max_examples=40, deadline=None)
def test_tensor_functoriality(p, q, r, data):
    a, b, c = atom("A", p), atom("B", q), atom("C", r)
    f1, f2 = random_mor(data, a, b), random_mor(data, b, c)
    g1, g2 = random_mor(data, c, a), random_mor(data, a, b)
    assert tensor_mor(f2 @ f1, g2 @ g1) == tensor_mor(f2, g2) @ tensor_mor(f1, g1)


@given(dims, dims, dims, st.data())
@settings(max_examples=40, deadline=None)
def test_curry_is_a_bijection(p, q, r, data):
    a, b, c = atom("A", p), atom("B", q), atom("C", r)
    f = random_mor(data, tensor_obj(a, b), c)
    g = curry(f)
    assert uncurry(g) == f
    # dimension-preserving on hom-sets: hom_lift is square and invertible
    hl = hom_lift(a, b, c)
    assert hl.mat.rows == hl.mat.cols == p * q * r and hl.is_iso()


@given(dims, dims, dims, st.data())
@settings(max_examples=30, deadline=None)
def test_pre_and_post_composition(p, q, r, data):
    u, x, t = atom("U", p), atom("X", q), atom("T", r)
    h = random_mor(data, u, x)
    f = random_mor(data, x, t)
    assert precompose_map(h, t).mat @ element(f) == element(f @ h)
    k = random_mor(data, t, u)
    assert postcompose_map(k, x).mat @ element(f) == element(k @ f)


@given(st.integers(1, 2), st.integers(1, 2), st.integers(1, 2), st.integers(1, 2), st.data())
@settings(max_examples=25, deadline=None)
def test_composition_map_associative(p, q, r, s, data):
    w, x, y, z = atom("W", p), atom("X", q), atom("Y", r), atom("Z", s)
    f, g, h = random_mor(data, w, x), random_mor(data, x, y), random_mor(data, y, z)
    c_wxy, c_wyz = composition_map(w, x, y), composition_map(w, y, z)
    c_xyz, c_wxz = composition_map(x, y, z), composition_map(w, x, z)
    left = c_wyz.mat @ (c_wxy.mat @ element(f).kron(element(g))).kron(element(h))
    right = c_wxz.mat @ element(f).kron(c_xyz.mat @ element(g).kron(element(h)))
    assert left == right == element(h @ g @ f)
