"""Conversions between package objects and the raw lists used by the oracle."""

from __future__ import annotations

from fractions import Fraction

from smoothrough.algebra import Algebra, Module
from smoothrough.category import atom, Mor, tensor_obj
from smoothrough.fileio import constants_from_left, constants_from_mu, constants_from_right, mu_from_constants


def plain(x):
    """Turn sympy rationals (as produced by the oracle) into Fractions, recursively."""
    if isinstance(x, (list, tuple)):
        return [plain(y) for y in x]
    return Fraction(str(x))


def algebra_from_constants(c, name: str = "A", unit=None) -> Algebra:
    c = plain(c)
    n = len(c)
    a = atom(name, n)
    return Algebra(a, Mor(tensor_obj(a, a), a, mu_from_constants(c, n)), unit, name=name)


def consts(a: Algebra) -> list:
    return constants_from_mu(a.mu.mat, a.dim)


def left_consts(m: Module) -> list:
    return constants_from_left(m.act_left.mat, m.left.dim, m.dim)


def right_consts(m: Module) -> list:
    return constants_from_right(m.act_right.mat, m.right.dim, m.dim)
