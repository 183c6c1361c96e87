import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for bruteforce helpers

from hfx import (AntipodeMap, DimCategory, HallFusionSpec, PromonoidalDimData,
                 audit_catalog_entry, catalog_get, catalog_names)


@pytest.fixture(scope="session")
def catalog_audits():
    """name -> (entry, algebra, audit report, contraction report or None)"""
    out = {}
    for name in catalog_names():
        entry = catalog_get(name)
        alg, audit, contractions = audit_catalog_entry(entry)
        out[name] = (entry, alg, audit, contractions)
    return out


def random_vertex_spec(rng: random.Random, with_sigma=False) -> HallFusionSpec:
    """Small random instance: <= 4 objects, d <= 3, entries <= 2, units
    forced to the unit pattern."""
    n = rng.randint(1, 4)
    objects = tuple(f"o{i}" for i in range(n))
    dims = {a: rng.randint(1, 3) for a in objects}
    cat = DimCategory(objects, dims)

    def random_table(unit):
        table = {}
        others = [a for a in objects if a != unit]
        support = rng.randint(0, 2 * n)
        for _ in range(support):
            a, b, u = (rng.choice(others or list(objects)) for _ in range(3))
            table[(a, b, u)] = rng.randint(1, 2)
        for a in objects:  # overwrite the unit rows with the forced pattern
            for u in objects:
                for key in ((unit, a, u), (a, unit, u)):
                    table.pop(key, None)
            table[(unit, a, a)] = dims[a]
            table[(a, unit, a)] = dims[a]
        return table

    unit_p = rng.choice(objects)
    # the identity involution needs the two units to coincide
    unit_q = unit_p if with_sigma else rng.choice(objects)
    p = PromonoidalDimData(cat, random_table(unit_p), unit_p)
    q = PromonoidalDimData(cat, random_table(unit_q), unit_q)
    sigma = None
    if with_sigma:
        sigma = AntipodeMap({a: a for a in objects})
    return HallFusionSpec(cat, p, q, sigma)


def random_monoid_spec(rng: random.Random) -> HallFusionSpec | None:
    """Delta tensors of a random small monoid (associative by rejection);
    these exercise the C2-true branch of the implication tests."""
    n = rng.randint(1, 3)
    names = tuple(f"m{i}" for i in range(n))
    for _ in range(60):
        table = {}
        for a in names:
            for b in names:
                if a == names[0]:
                    table[(a, b)] = b
                elif b == names[0]:
                    table[(a, b)] = a
                else:
                    table[(a, b)] = rng.choice(names)
        ok = all(
            table[(table[(a, b)], c)] == table[(a, table[(b, c)])]
            for a in names for b in names for c in names)
        if ok:
            cat = DimCategory(names, {a: 1 for a in names})
            delta = {(a, b, table[(a, b)]): 1 for a in names for b in names}
            p = PromonoidalDimData(cat, delta, names[0])
            q = PromonoidalDimData(cat, dict(delta), names[0])
            return HallFusionSpec(cat, p, q)
    return None
