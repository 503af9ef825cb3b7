"""Independent brute-force reference computations.

Everything here works from raw structure constants (nested lists) with
sympy's exact matrices, and never calls into the package.  Conventions:

* algebra ``c[i][j][k]``: ``a_i a_j = sum_k c[i][j][k] a_k``
* left action ``l[i][x][y]``: ``a_i . e_x = sum_y l[i][x][y] e_y``
* right action ``r[x][i][y]``: ``e_x . a_i = sum_y r[x][i][y] e_y``
"""

from __future__ import annotations

from itertools import product

import sympy as sp


def _mat(rows, ncols):
    if not rows:
        return sp.zeros(0, ncols)
    return sp.Matrix(rows)


def rank_of(rows, ncols) -> int:
    return _mat(rows, ncols).rank() if rows else 0


# -- algebras from hand formulas -----------------------------------------------------------

def pairing_constants(dv: int, dw: int, b) -> list:
    """``(v1⊗w1)(v2⊗w2) = b(w1, v2) v1⊗w2``, basis ``v*dw + w``, ``b`` indexed ``w*dv + v``."""
    n = dv * dw
    c = [[[0] * n for _ in range(n)] for _ in range(n)]
    for v1, w1, v2, w2 in product(range(dv), range(dw), range(dv), range(dw)):
        c[v1 * dw + w1][v2 * dw + w2][v1 * dw + w2] += sp.Rational(b[w1 * dv + v2])
    return c


def matrix_unit_constants(n: int) -> list:
    """``E_ab E_cd = δ_bc E_ad`` with ``E_ab`` at index ``a*n + b``."""
    d = n * n
    c = [[[0] * d for _ in range(d)] for _ in range(d)]
    for a, b, cc, dd in product(range(n), repeat=4):
        if b == cc:
            c[a * n + b][cc * n + dd][a * n + dd] = 1
    return c


def is_associative(c) -> bool:
    n = len(c)
    for i, j, k in product(range(n), repeat=3):
        for t in range(n):
            lhs = sum(c[i][j][s] * c[s][k][t] for s in range(n))
            rhs = sum(c[j][k][s] * c[i][s][t] for s in range(n))
            if lhs != rhs:
                return False
    return True


def find_unit(c):
    """Solve ``e a_j = a_j = a_j e`` for all ``j``; ``None`` if impossible."""
    n = len(c)
    if n == 0:
        return []
    e = sp.symbols(f"e0:{n}")
    eqs = []
    for j, t in product(range(n), repeat=2):
        tgt = 1 if j == t else 0
        eqs.append(sum(e[i] * c[i][j][t] for i in range(n)) - tgt)
        eqs.append(sum(e[i] * c[j][i][t] for i in range(n)) - tgt)
    sol = sp.solve(eqs, e, dict=True)
    if not sol:
        return None
    return [sol[0].get(x, 0) for x in e]


def regular_left(c) -> list:
    return c


def regular_right(c) -> list:
    # e_x . a_i = a_x a_i
    n = len(c)
    return [[[c[x][i][y] for y in range(n)] for i in range(n)] for x in range(n)]


# -- balanced constructions ----------------------------------------------------------------------

def tensor_dim(r, dx: int, l, dy: int, na: int) -> int:
    """``dim X ⊗_A Y``: span of ``x·a ⊗ y - x ⊗ a·y`` over all basis triples."""
    rows = []
    for x, i, y in product(range(dx), range(na), range(dy)):
        vec = [0] * (dx * dy)
        for x2 in range(dx):
            vec[x2 * dy + y] += r[x][i][x2]
        for y2 in range(dy):
            vec[x * dy + y2] -= l[i][y][y2]
        rows.append(vec)
    return dx * dy - rank_of(rows, dx * dy)


def intertwiner_dim(lx, dx: int, ly, dy: int, na: int) -> int:
    """``dim`` of left ``A``-linear maps ``X -> Y``; unknown ``F[y][x]`` at ``y*dx + x``."""
    rows = []
    for i, x, y in product(range(na), range(dx), range(dy)):
        # coefficient of e_y in f(a_i e_x) - a_i f(e_x)
        vec = [0] * (dx * dy)
        for x2 in range(dx):
            vec[y * dx + x2] += lx[i][x][x2]
        for y2 in range(dy):
            vec[y2 * dx + x] -= ly[i][y2][y]
        rows.append(vec)
    return dx * dy - rank_of(rows, dx * dy)


def action_span_dim(l, dx: int, na: int) -> int:
    """``dim span{a·x}``, the rank of ``A⊗X -> X``."""
    rows = [list(l[i][x]) for i in range(na) for x in range(dx)]
    return rank_of(rows, dx)


def annihilated_dim(l, dx: int, na: int) -> int:
    """``dim {x : a·x = 0 for all a}``."""
    if dx == 0:
        return 0
    # the map x -> (a_i x)_i as a (na*dx) x dx matrix
    m = sp.zeros(na * dx, dx)
    for i, x, y in product(range(na), range(dx), range(dx)):
        m[i * dx + y, x] = l[i][x][y]
    return dx - m.rank()


def smooth_dim(c, l, dx: int) -> int:
    n = len(c)
    return tensor_dim(regular_right(c), n, l, dx, n)


def rough_dim(c, l, dx: int) -> int:
    n = len(c)
    return intertwiner_dim(regular_left(c), n, l, dx, n)


def is_smooth(c, l, dx: int) -> bool:
    # A⊗_A X -> X is onto iff A·X = X, and then iso iff the dims agree
    n = len(c)
    return action_span_dim(l, dx, n) == dx and smooth_dim(c, l, dx) == dx


def is_rough(c, l, dx: int) -> bool:
    n = len(c)
    return annihilated_dim(l, dx, n) == 0 and rough_dim(c, l, dx) == dx


def is_self_induced(c) -> bool:
    return is_smooth(c, regular_left(c), len(c))


# -- multipliers and pairings ------------------------------------------------------------------

def left_multiplier_dim(c) -> int:
    n = len(c)
    return intertwiner_dim(c, n, c, n, n)


def right_multiplier_dim(c) -> int:
    n = len(c)
    # right A-linear maps: f(x a) = f(x) a; reuse the left solver on A^op
    op = [[[c[j][i][k] for k in range(n)] for j in range(n)] for i in range(n)]
    return intertwiner_dim(op, n, op, n, n)


def double_centralizer_dim(dv: int, dw: int, b) -> int:
    """Pairs ``(L, R)`` with ``b(w, L v) = b(R w, v)``; unknowns ``L[v'][v]``, ``R[w'][w]``."""
    nl, nr = dv * dv, dw * dw
    rows = []
    for w, v in product(range(dw), range(dv)):
        vec = [0] * (nl + nr)
        for v2 in range(dv):
            vec[v2 * dv + v] += b[w * dv + v2]      # L e_v = sum_v2 L[v2][v] e_v2
        for w2 in range(dw):
            vec[nl + w2 * dw + w] -= b[w2 * dv + v]
        rows.append(vec)
    return nl + nr - rank_of(rows, nl + nr)


def degenerate_dim(dv: int, dw: int, b) -> int:
    """``dim {v : b(w, v) = 0 for all w}``."""
    rows = [[b[w * dv + v] for v in range(dv)] for w in range(dw)]
    return dv - rank_of(rows, dv)


def multiplier_module_action(c):
    """``M_l(A) = Hom_A(A, A)`` with ``(a·f)(x) = f(x)·a``, in a sympy nullspace basis.

    Returns ``(l, dim)`` in the left-action convention.
    """
    n = len(c)
    rows = []
    for i, x, y in product(range(n), repeat=3):
        vec = [0] * (n * n)
        for x2 in range(n):
            vec[y * n + x2] += c[i][x][x2]
        for y2 in range(n):
            vec[y2 * n + x] -= c[i][y2][y]
        rows.append(vec)
    basis = _mat(rows, n * n).nullspace()
    d = len(basis)
    if d == 0:
        return [], 0
    B = sp.Matrix.hstack(*basis)
    pinv = (B.T * B).inv() * B.T
    l = []
    for i in range(n):
        li = []
        for k in range(d):
            F = B[:, k]  # F[y*n + x]: coefficient of a_y in f(a_x)
            G = sp.zeros(n * n, 1)
            for x, y in product(range(n), repeat=2):
                # (a_i · f)(a_x) = f(a_x) a_i
                for y2 in range(n):
                    G[y2 * n + x] += F[y * n + x] * c[y][i][y2]
            coords = pinv * G
            li.append([coords[t] for t in range(d)])
        l.append(li)
    return l, d


def is_left_module(c, l, dx: int) -> bool:
    """``(a_i a_j)·x = a_i·(a_j·x)`` on all basis triples."""
    n = len(c)
    for i, j, x in product(range(n), range(n), range(dx)):
        for y in range(dx):
            lhs = sum(c[i][j][k] * l[k][x][y] for k in range(n))
            rhs = sum(l[j][x][z] * l[i][z][y] for z in range(dx))
            if lhs != rhs:
                return False
    return True


def opposite_constants(c) -> list:
    n = len(c)
    return [[[c[j][i][k] for k in range(n)] for j in range(n)] for i in range(n)]
