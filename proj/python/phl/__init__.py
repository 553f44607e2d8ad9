"""Finite poset homomorphism counting and order certificates."""

import json as _json

from ._phl import (
    PhlError,
    Poset,
    brute_force_count,
    count,
    count_sro,
    enumerate as enumerate_maps,
    ev_size,
    is_isomorphic,
    selftest,
)
from . import _phl

__all__ = [
    "PhlError",
    "Poset",
    "brute_force_count",
    "catalog",
    "check_gle",
    "construct_sum",
    "count",
    "count_sro",
    "enumerate_maps",
    "ev",
    "ev_size",
    "is_isomorphic",
    "matrices",
    "selftest",
    "verify_certificate",
    "witness",
]


def catalog(name):
    return Poset("catalog:" + name)


def _poset(p):
    return p if isinstance(p, Poset) else Poset(p)


def matrices(targets):
    return _json.loads(_phl.matrices_json([_poset(t) for t in targets]))


def check_gle(r, s, bound=5):
    return _json.loads(_phl.check_gle_json(_poset(r), _poset(s), bound))


def witness(r, s):
    return _json.loads(_phl.witness_json(_poset(r), _poset(s)))


def verify_certificate(cert, bound=6):
    doc = cert if isinstance(cert, str) else _json.dumps(cert)
    return _json.loads(_phl.verify_certificate_json(doc, bound))


def construct_sum(spec, bound=4):
    doc = spec if isinstance(spec, str) else _json.dumps(spec)
    return _json.loads(_phl.construct_sum_json(doc, bound))


def ev(p):
    return [_json.loads(line) for line in _phl.ev_jsonl(_poset(p)).splitlines()]
