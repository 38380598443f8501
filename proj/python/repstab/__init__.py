"""Exact S_n-equivariant cohomology of diagonal arrangement complements.

Characteristics are returned as dicts mapping a partition (tuple) to its
Schur coefficient (Fraction).
"""

import json
from fractions import Fraction

from . import _core
from ._core import OracleLimitExceeded

__all__ = [
    "OracleLimitExceeded",
    "kequal_char",
    "psi",
    "sharp_bound",
    "lambda_char",
    "lambda_report",
    "theorem_bounds",
    "general_bound",
    "is_stable_step",
    "to_text",
    "from_text",
]


def _decode(text):
    raw = json.loads(text)
    return {_key(k): Fraction(v) for k, v in raw.items()}


def _key(text):
    inner = text.strip("[]")
    return tuple(int(p) for p in inner.split(",")) if inner else ()


def _encode(f):
    def num(c):
        c = Fraction(c)
        return f"{c.numerator}/{c.denominator}"

    return json.dumps({"[" + ",".join(map(str, k)) + "]": num(c) for k, c in f.items()})


def _report(text):
    rep = json.loads(text)
    rep["chars"] = {int(n): {_key(k): Fraction(v) for k, v in f.items()}
                    for n, f in rep["chars"].items()}
    rep["stable_steps"] = {int(n): s for n, s in rep["stable_steps"].items()}
    rep["theorem_bounds"] = [Fraction(b) for b in rep["theorem_bounds"]]
    return rep


def kequal_char(n, i, d, k):
    """ch H̃^i of the k-equal complement in (R^d)^n."""
    return _decode(_core.kequal_char(n, i, d, k))


def psi(n, q, r, t, d, k):
    return _decode(_core.psi(n, q, r, t, d, k))


def sharp_bound(d, k, i, horizon=None, max_degree=None, jobs=1):
    """Certified stability report; see the "status" and "sharp_bound" keys."""
    return _report(_core.sharp_bound(d, k, i, horizon, max_degree, jobs))


def lambda_char(n, d, lam, i, limit=_core.DEFAULT_ORACLE_LIMIT):
    """Brute-force characteristic for Λ given as text, e.g. "[2,2];[3]"."""
    return _decode(_core.lambda_char(n, d, lam, i, limit))


def lambda_report(lam, d, i, n_max, limit=_core.DEFAULT_ORACLE_LIMIT):
    return _report(_core.lambda_report(lam, d, i, n_max, limit))


def theorem_bounds(d, k, i):
    return [Fraction(b) for b in _core.theorem_bounds(d, k, i)]


def general_bound(lam, i, d):
    return Fraction(_core.general_bound(lam, i, d))


def is_stable_step(current, previous):
    return _core.is_stable_step(_encode(current), _encode(previous))


def to_text(f):
    return _core.to_text(_encode(f))


def from_text(text):
    return _decode(_core.from_text(text))
