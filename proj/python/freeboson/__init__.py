"""Exact free boson Fock space: Heisenberg and Virasoro operators, zeta
regularized quadratic operators, vertex operators and identity checks.

Vectors are dicts mapping partitions (tuples of positive parts, largest
first) to Fractions; () is the vacuum.
"""

import json
from fractions import Fraction

from . import _freeboson as _fb

ConfigError = _fb.ConfigError
WindowInsufficient = _fb.WindowInsufficient

VACUUM = {(): Fraction(1)}


def _out(m):
    return {tuple(k): Fraction(c) for k, c in m}


def _in(v):
    return {tuple(k): str(Fraction(c)) for k, c in v.items()}


def bernoulli(n):
    return Fraction(_fb.bernoulli(n))


def zeta_neg(k):
    """zeta(1 - k)."""
    return Fraction(_fb.zeta_neg(k))


def regularization_constant(r):
    return Fraction(_fb.regularization_constant(r))


def central_term(r, s, m):
    return Fraction(_fb.central_term(r, s, m))


def graded_dim(n):
    return _fb.graded_dim(n)


def character_offset():
    return Fraction(_fb.character_offset())


def partitions_of(n):
    return [tuple(p) for p in _fb.partitions_of(n)]


def omega():
    return _out(_fb.omega())


def h(n, v):
    return _out(_fb.h_apply(n, _in(v)))


def virasoro(n, v, regularized=False):
    return _out(_fb.virasoro_apply(n, _in(v), regularized))


def quad(r1, r2, n, v, regularized=False):
    return _out(_fb.quad_apply(r1, r2, n, regularized, _in(v)))


def vertex_mode(u, n, v):
    return _out(_fb.vertex_mode(_in(u), n, _in(v)))


def x_mode(u, n, v):
    return _out(_fb.x_mode(_in(u), n, _in(v)))


def bracket_coeff(u, k, v):
    return _out(_fb.bracket_coeff(_in(u), k, _in(v)))


def catalog_ids():
    return list(_fb.catalog_ids())


def run_suite(suite="core", weight_cap=None, x_window=None, y_orders=(), mode_range=None, seed=1):
    """Runs checks and returns their reports as dicts."""
    return json.loads(_fb.run_suite(suite, weight_cap, x_window, list(y_orders), mode_range, seed))


def render_table(kind, max_n):
    return _fb.render_table(kind, max_n)
