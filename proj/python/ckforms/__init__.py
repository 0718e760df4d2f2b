"""Python access to the ckforms core. Every call returns parsed JSON."""

import json

from . import _ckforms
from ._ckforms import CkformsError

__version__ = "0.1.0"


def parse_pair(text):
    return _ckforms.parse_pair(text)


def analyze(pair, mc=False, config=""):
    return json.loads(_ckforms.analyze(pair, mc, config))


def catalog(config="", catalog_toml=""):
    return json.loads(_ckforms.catalog(config, catalog_toml))


def integrate(pair, n=20000, seed=0, list_coefficients=64):
    return json.loads(_ckforms.integrate(pair, n, seed, list_coefficients))


def cohomology(space):
    return json.loads(_ckforms.cohomology(space))


def lefschetz(space, endo):
    return json.loads(_ckforms.lefschetz(space, endo))


__all__ = ["CkformsError", "analyze", "catalog", "cohomology", "integrate", "lefschetz", "parse_pair"]
