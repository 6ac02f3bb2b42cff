"""Exact checks of the (q,t)-hook formula for d-complete posets.

Reports come back as dicts in the same schema the command line tool writes.
"""

import json
from fractions import Fraction

from . import _core

UsageError = _core.UsageError
identity_names = _core.identity_names
poset_dot = _core.poset_dot


def _alpha(parts):
    return parts if isinstance(parts, str) else ",".join(str(p) for p in parts)


def verify_okada(family, alpha, beta="", f=0, degree=3, mode="exact", points=3, seed=42):
    return json.loads(_core.verify_okada(family, _alpha(alpha), _alpha(beta), f, degree, mode, points, seed))


def verify_identity(name, seed=42, trials=0):
    return json.loads(_core.verify_identity(name, seed, trials))


def run_criterion(criterion, seed=42):
    return json.loads(_core.run_criterion(criterion, seed))


def poset(family, alpha, beta="", f=0):
    return json.loads(_core.poset_json(family, _alpha(alpha), _alpha(beta), f))


def hook_agreement(family, alpha, beta="", f=0):
    return json.loads(_core.hook_agreement(family, _alpha(alpha), _alpha(beta), f))


def q_poch(a, q, n):
    return Fraction(_core.q_poch(str(Fraction(a)), str(Fraction(q)), n))


def gasper_check(a, b, d, q, n):
    args = (str(Fraction(x)) for x in (a, b, d, q))
    return json.loads(_core.gasper_check(*args, n))
