"""The builtin derivations shipped in ``derivations/``.

``derivations/index.yml`` maps each name to its proof file, a short
description and any aliases; derivations are listed in index order.

"""

import functools
import logging
import os

import yaml

from ..exceptions import UnknownDerivation
from .proofs import load_proof


log = logging.getLogger(__name__)


DERIVATIONS_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'derivations')


@functools.lru_cache(maxsize=None)
def _index():
    with open(os.path.join(DERIVATIONS_DIR, 'index.yml')) as fh:
        raw = yaml.safe_load(fh)
    out = {}
    for entry in raw['derivations']:
        out[entry['name']] = entry
    return out


@functools.lru_cache(maxsize=None)
def _aliases():
    return {alias: name for name, entry in _index().items() for alias in entry.get('aliases', ())}


def resolve(name):
    """The listed name for ``name``, which may be an alias."""
    name = _aliases().get(name, name)
    if name not in _index():
        raise UnknownDerivation(name)
    return name


def derivation_names():
    return list(_index())


def describe(name):
    return _index()[resolve(name)].get('description', '')


def builtin(name):
    """Load one builtin derivation by name or alias."""
    return _load(resolve(name))


@functools.lru_cache(maxsize=None)
def _load(name):
    entry = _index()[name]
    return load_proof(os.path.join(DERIVATIONS_DIR, entry.get('file', name + '.proof')), name)


def builtin_derivations():
    """Every builtin derivation, as ``(name, derivation)`` pairs."""
    return [(name, builtin(name)) for name in derivation_names()]
