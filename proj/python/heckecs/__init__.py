"""Demazure-Lusztig operators, Whittaker sums and their checks, from C++."""

import json

from . import _heckecs
from ._heckecs import SpecError, __version__

__all__ = [
    "SpecError",
    "__version__",
    "info",
    "roots",
    "weyl_layers",
    "character",
    "whittaker",
    "verify_finite_cs",
    "verify_affine_cs",
    "verify_gk_limit",
    "verify_hecke_relations",
    "run_acceptance",
]


def info(spec):
    return json.loads(_heckecs.info(spec))


def roots(spec, depth):
    return json.loads(_heckecs.roots(spec, depth))


def weyl_layers(spec, max_length):
    """Reduced words per length, generators 1-based."""
    return json.loads(_heckecs.weyl_layers(spec, max_length))


def character(spec, labels, depth):
    return json.loads(_heckecs.character(spec, list(labels), depth))


def whittaker(spec, labels, depth=None, margin=2):
    return json.loads(_heckecs.whittaker(spec, list(labels), depth, margin))


def verify_finite_cs(spec, labels):
    return json.loads(_heckecs.verify_finite_cs(spec, list(labels)))


def verify_affine_cs(spec, labels, depth=6, qs=()):
    return json.loads(_heckecs.verify_affine_cs(spec, list(labels), depth, [str(q) for q in qs]))


def verify_gk_limit(spec, nu, depth=6):
    return json.loads(_heckecs.verify_gk_limit(spec, list(nu), depth))


def verify_hecke_relations(spec, count=100, seed=20240611):
    return json.loads(_heckecs.verify_hecke_relations(spec, count, seed))


def run_acceptance(seed=20240611):
    return json.loads(_heckecs.run_acceptance(seed))
