"""Cached fixtures shared by the test modules."""

from functools import lru_cache

from legrep.dga import build_dga
from legrep.diagram import CATALOG_TEXT, catalog
from legrep.reps import enumerate_reps, equivalence_classes

KNOTS = sorted(CATALOG_TEXT)
WITH_REPS = ["unknot", "trefoil", "figure8"]


@lru_cache(maxsize=None)
def dga(name, signs="LT"):
    return build_dga(catalog(name), signs)


@lru_cache(maxsize=None)
def reps(name, n, q):
    return tuple(enumerate_reps(dga(name), n, q))


@lru_cache(maxsize=None)
def classes(name, n, q):
    return tuple(tuple(c) for c in equivalence_classes(dga(name), list(reps(name, n, q))))
