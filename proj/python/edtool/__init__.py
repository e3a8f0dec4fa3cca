"""Exact essential-dimension bounds and generic-freeness certificates.

Thin wrapper over the C++ core: structured results (certificates, bound
reports, sampling statistics) arrive as JSON and are decoded into dicts.
"""

import json as _json

from ._core import (  # noqa: F401
    Refusal,
    c_lambda2_dim,
    cartan_matrix,
    cokernel_order,
    coprime_reduce,
    frobenius_bound,
    generates_full_lattice,
    has_minus_one,
    hnf,
    kernel_basis,
    kernel_mod_p,
    orbit_size,
    root_count,
    short_root_count,
    snf,
    spin_faithful_dim,
    weyl_order,
)
from . import _core


def certify_short(type, strategy="auto", **kw):
    return _json.loads(_core.certify_short_json(type, strategy, **kw))


def certify_minuscule(type, weight, strategy="auto", **kw):
    return _json.loads(_core.certify_minuscule_json(type, weight, strategy, **kw))


def certify_half_spin(n, strategy="auto", **kw):
    return _json.loads(_core.certify_half_spin_json(n, strategy, **kw))


def certify_projs(n):
    return _json.loads(_core.certify_projs_json(n))


def best_bound(type, isogeny="adjoint", mu=0, char=0):
    return _json.loads(_core.best_bound_json(type, isogeny, mu, char))


def family_bound(family, n, mu=0, char=0):
    return _json.loads(_core.family_bound_json(family, n, mu, char))


def agl1_check(n, q, samples=500, seed=1):
    return _json.loads(_core.agl1_check_json(n, q, samples, seed))
