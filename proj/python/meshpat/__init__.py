"""Distributions of simple marked mesh patterns in permutations."""

import json

from ._meshpat import (
    ResourceLimitError,
    main,
    mmp,
    multivar,
    series,
    series_ids,
    series_offset,
    verify_suites,
)
from . import _meshpat

__all__ = [
    "ResourceLimitError",
    "distribution",
    "main",
    "mmp",
    "multivar",
    "q_distribution",
    "record",
    "series",
    "series_ids",
    "series_offset",
    "verify",
    "verify_suites",
]


def _ints(row):
    return [int(c) for c in row]


def record(n, spec=None, *, kmax=0, cls="all", via="oracle", q=False, cap=0, threads=0):
    """The output record for R_n as a dict with integer coefficients."""
    rec = json.loads(_meshpat.record_json(n, spec, kmax, cls, via, q, cap, threads))
    if rec["coeffs"] and isinstance(rec["coeffs"][0], list):
        rec["coeffs"] = [_ints(row) for row in rec["coeffs"]]
    else:
        rec["coeffs"] = _ints(rec["coeffs"])
    return rec


def distribution(n, spec=None, *, kmax=0, cls="all", via="oracle", cap=0, threads=0):
    """Ascending coefficients of R_n(x)."""
    return record(n, spec, kmax=kmax, cls=cls, via=via, cap=cap, threads=threads)["coeffs"]


def q_distribution(n, spec, *, via="oracle", cap=0, threads=0):
    """Coefficient rows [x^i][q^j] of R_n(x, q)."""
    return record(n, spec, via=via, q=True, cap=cap, threads=threads)["coeffs"]


def verify(suite="all", max_n=8, *, cap=0, threads=0):
    return json.loads(_meshpat.verify_json(suite, max_n, cap, threads))
