"""Shared corpus and independent oracles for the test suite.

The oracles here deliberately avoid the library's linear algebra: the
differential-squared check counts two-step paths straight off the entry
list, and the homology dimensions come from exhaustive subset enumeration.
"""

from collections import Counter
from functools import lru_cache
from math import log2

import knotupsilon as ku


@lru_cache(maxsize=1)
def corpus():
    """Named knot models; every entry is a genuine knot complex, so the
    symmetry and mirror properties are expected to hold on all of them."""
    trefoil = ku.torus_knot_complex(2, 3)
    fig8 = ku.figure_eight_complex()
    return (
        ("unknot", ku.unknot_complex()),
        ("trefoil", trefoil),
        ("trefoil-left", ku.torus_knot_complex(2, -3)),
        ("figure8", fig8),
        ("figure8-mirror", ku.dual(fig8)),
        ("T(2,5)", ku.torus_knot_complex(2, 5)),
        ("T(2,-5)", ku.torus_knot_complex(2, -5)),
        ("T(2,7)", ku.torus_knot_complex(2, 7)),
        ("T(3,4)", ku.torus_knot_complex(3, 4)),
        ("T(3,7)", ku.torus_knot_complex(3, 7)),
        ("trefoil#trefoil", ku.tensor(trefoil, trefoil)),
        ("trefoil#figure8", ku.tensor(trefoil, fig8)),
        ("trefoil#trefoil#-figure8",
         ku.tensor(ku.tensor(trefoil, trefoil), ku.dual(fig8))),
    )


def brute_d_squared_even(c):
    """Count two-step paths per (source, target, total U-power) directly."""
    counts = Counter()
    for e1 in c.differential:
        for e2 in c.differential:
            if e2.source == e1.target:
                counts[(e1.source, e2.target, e1.upower + e2.upower)] += 1
    return all(n % 2 == 0 for n in counts.values())


def _point_boundary(c, point):
    """Boundary of one lattice point as a frozenset of (name, i) pairs,
    computed straight off the differential list."""
    terms = Counter()
    for e in c.differential:
        if e.source == point[0]:
            terms[(e.target, point[1] - e.upower)] += 1
    return frozenset(k for k, n in terms.items() if n % 2 == 1)


def _chain_boundary_set(c, points):
    acc = set()
    for p in points:
        acc ^= _point_boundary(c, p)
    return frozenset(acc)


def enumerated_homology_dim(c, d):
    """Homology dimension on the grading-d slice by exhaustive enumeration.

    Counts cycles and distinct boundaries among all subsets; dimensions are
    log2 of the counts.  Only for small complexes.
    """
    pts = [(p.generator, p.i) for p in ku.grading_slice(c, d)]
    above = [(p.generator, p.i) for p in ku.grading_slice(c, d + 1)]
    assert len(pts) <= 14 and len(above) <= 14, "complex too large for oracle"

    n_cycles = 0
    for mask in range(1 << len(pts)):
        subset = [pts[k] for k in range(len(pts)) if mask >> k & 1]
        if not _chain_boundary_set(c, subset):
            n_cycles += 1
    boundaries = set()
    for mask in range(1 << len(above)):
        subset = [above[k] for k in range(len(above)) if mask >> k & 1]
        boundaries.add(_chain_boundary_set(c, subset))
    dim_z = log2(n_cycles)
    dim_b = log2(len(boundaries))
    assert dim_z == int(dim_z) and dim_b == int(dim_b)
    return int(dim_z) - int(dim_b)


def positionally_equal(c1, c2, names=False):
    """Structural equality up to generator renaming: gradings per position
    and differential entries as position triples."""
    if len(c1.generators) != len(c2.generators):
        return False
    if names and [g.name for g in c1.generators] != [g.name for g in c2.generators]:
        return False
    g1 = [(g.alexander, g.maslov) for g in c1.generators]
    g2 = [(g.alexander, g.maslov) for g in c2.generators]
    if g1 != g2 or c1.ambient_d != c2.ambient_d:
        return False
    pos1 = {g.name: k for k, g in enumerate(c1.generators)}
    pos2 = {g.name: k for k, g in enumerate(c2.generators)}
    e1 = {(pos1[e.source], pos1[e.target], e.upower) for e in c1.differential}
    e2 = {(pos2[e.source], pos2[e.target], e.upower) for e in c2.differential}
    return e1 == e2


def random_staircase(rng, max_half_steps=2, max_len=3):
    """Random staircase with up to max_half_steps horizontal/vertical pairs."""
    n = 2 * rng.randint(1, max_half_steps)
    return ku.staircase([rng.randint(1, max_len) for _ in range(n)])


def random_admissible_complex(rng, tag):
    """Tensor of two random staircases, direct-summed with random boxes."""
    c = ku.tensor(random_staircase(rng), random_staircase(rng))
    for b in range(rng.randint(0, 2)):
        box = ku.box_complex(prefix="%s_box%d_" % (tag, b),
                             alexander=rng.randint(-2, 2),
                             maslov=rng.randint(-2, 2))
        c = ku.direct_sum(c, box)
    return c
