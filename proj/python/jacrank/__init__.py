"""Jacobi sums, character-sum L-polynomials and p-rank tests for cyclic covers.

Every function returns plain Python data decoded from the library's JSON
reports. Curves are dicts in the CurveSpecFile layout:
{"p", "h", "m", "exponents", "branch", "base": "P1" | {"m0", "f0"}}.
"""

import json

from . import _core
from ._core import JacrankError

__all__ = [
    "JacrankError",
    "error_code",
    "jacobi",
    "stickelberger",
    "criteria",
    "lpoly",
    "zeta",
    "prank",
    "cartier",
    "deuring",
    "search",
]


def error_code(err):
    """Code name of a JacrankError, e.g. "BadExponent"."""
    return str(err).split(":", 1)[0]


def _curve(curve):
    return curve if isinstance(curve, str) else json.dumps(curve)


def jacobi(m, p, a, h=1, threads=0, max_terms=10**9):
    return json.loads(_core.jacobi(m, p, h, list(a), threads, max_terms))


def stickelberger(m, p, a):
    return json.loads(_core.stickelberger(m, p, list(a)))


def criteria(m, p, a):
    return json.loads(_core.criteria(m, p, list(a)))


def lpoly(curve, j=None, threads=0, max_terms=10**9):
    return json.loads(_core.lpoly(_curve(curve), j, threads, max_terms))


def zeta(curve, threads=0, max_terms=10**9):
    return json.loads(_core.zeta(_curve(curve), threads, max_terms))


def prank(curve, route="all", threads=0, max_terms=10**9):
    return json.loads(_core.prank(_curve(curve), route, threads, max_terms))


def cartier(p, f):
    return json.loads(_core.cartier(p, list(f)))


def deuring(p):
    return json.loads(_core.deuring(p))


def search(template, threads=0, max_terms=10**9):
    """Rows (alphas, verdict, witnesses) of the p-rank-0 branch scan."""
    text = _core.search(_curve(template), threads, max_terms)
    rows = []
    for line in text.splitlines():
        if line.startswith("#"):
            continue
        cells = line.split("\t")
        rows.append(([json.loads(c) for c in cells[:-2]], cells[-2], cells[-1]))
    return rows
