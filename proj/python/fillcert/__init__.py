"""Linking matrices and filling certificates for spines of T^3 and T^2 x I.

Every function returns plain python data in the same shapes as the
command-line tool's JSON output.
"""

import json

from . import _fillcert
from ._fillcert import Error, InvalidInput, StructureError, hall_basis, laurent, lcs_depth, witt_rank

__all__ = [
    "Error",
    "InvalidInput",
    "StructureError",
    "build_matrix",
    "certify",
    "finger_check",
    "hall_basis",
    "is_injective",
    "laurent",
    "lcs_depth",
    "negative_control",
    "phi",
    "standard_link",
    "vandermonde_check",
    "witt_rank",
]


def standard_link(k, dim):
    return json.loads(_fillcert.standard_link(k, dim))


def build_matrix(k, link=None, dim=2, mode="closed"):
    """Linking matrix i_k. `link` is a LinkSpec dict; the standard link by default."""
    if link is None:
        link = standard_link(k, dim)
    return json.loads(_fillcert.build_matrix(k, json.dumps(link), mode))


def is_injective(matrix):
    return json.loads(_fillcert.is_injective(json.dumps(matrix)))


def certify(m, dim, mode="closed", geometric_cap=-1):
    return json.loads(_fillcert.certify(m, dim, mode, geometric_cap))


def vandermonde_check(k, dim=2):
    return json.loads(_fillcert.vandermonde_check(k, dim))


def negative_control():
    return json.loads(_fillcert.negative_control())


def finger_check(k, dim, seed, radius=2, degree=2):
    return json.loads(_fillcert.finger_check(k, dim, seed, radius, degree))


def phi(word, k, rank=3):
    return json.loads(_fillcert.phi(word, k, rank))
