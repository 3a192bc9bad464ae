"""Independently transcribed expected tables for the builtin families.

These values were typed by hand from the source tables and are the oracle
the generator code is tested against; they deliberately do not import or
reuse anything from the package.  The U tables were dualized from Uc by
hand with the index map (2d-k, 2d-l, 2d-q, d-p), d = 2, and the Supported
tables from Total with d = 3, then frozen here as plain data.

Each builder returns {tag: (n, m, entries)} with m = None on the
degeneration side; entries whose dimension vanishes at the given parameter
are dropped, matching the convention that absent means zero.
"""


def _clean(tables):
    return {
        tag: (n, m, {quad: dim for quad, dim in entries.items() if dim})
        for tag, (n, m, entries) in tables.items()
    }


def elliptic(r):
    """Elliptic K3 over a rational curve; degree-1 section = r smooth fibres."""
    return _clean({
        "Y": (2, 1, {
            (0, 1, 0, 0): 1,
            (2, 1, 2, 1): 1,
            (2, 2, 2, 0): 1, (2, 2, 2, 1): 18, (2, 2, 2, 2): 1,
            (2, 3, 2, 1): 1,
            (4, 3, 4, 2): 1,
        }),
        "Z:1": (2, 1, {
            (0, 0, 0, 0): r,
            (1, 1, 1, 0): r, (1, 1, 1, 1): r,
            (2, 2, 2, 1): r,
        }),
        "U": (2, 1, {
            (0, 1, 0, 0): 1,
            (1, 1, 2, 1): r - 1,
            (2, 2, 2, 0): 1, (2, 2, 2, 1): 18, (2, 2, 2, 2): 1,
            (2, 2, 3, 1): r, (2, 2, 3, 2): r,
            (2, 3, 2, 1): 1,
            (3, 3, 4, 2): r - 1,
        }),
        "Uc": (2, 1, {
            (1, 1, 0, 0): r - 1,
            (2, 1, 2, 1): 1,
            (2, 2, 1, 0): r, (2, 2, 1, 1): r,
            (2, 2, 2, 0): 1, (2, 2, 2, 1): 18, (2, 2, 2, 2): 1,
            (3, 3, 2, 1): r - 1,
            (4, 3, 4, 2): 1,
        }),
    })


def finite(g):
    """K3 finite over a rational surface; degree-1 section a genus-g curve,
    degree-2 section 2g-2 points."""
    return _clean({
        "Y": (2, 2, {
            (0, 2, 0, 0): 1,
            (2, 2, 2, 0): 1, (2, 2, 2, 1): 20, (2, 2, 2, 2): 1,
            (4, 2, 4, 2): 1,
        }),
        "Z:1": (2, 2, {
            (0, 1, 0, 0): 1,
            (1, 1, 1, 0): g, (1, 1, 1, 1): g,
            (2, 1, 2, 1): 1,
        }),
        "Z:2": (2, 2, {
            (0, 0, 0, 0): 2 * g - 2,
        }),
        "U": (2, 2, {
            (0, 2, 0, 0): 1,
            (2, 2, 2, 0): 1, (2, 2, 2, 1): 19, (2, 2, 2, 2): 1,
            (2, 2, 3, 1): g, (2, 2, 3, 2): g,
        }),
        "Uc": (2, 2, {
            (2, 2, 1, 0): g, (2, 2, 1, 1): g,
            (2, 2, 2, 0): 1, (2, 2, 2, 1): 19, (2, 2, 2, 2): 1,
            (4, 2, 4, 2): 1,
        }),
    })


def type_ii(r):
    """Degeneration with a chain of r+1 components glued along elliptic
    curves; nilpotency index 2."""
    return _clean({
        "Xlim": (2, None, {
            (0, 0, 0, 0): 1,
            (2, 2, 1, 0): 1, (2, 2, 1, 1): 1,
            (2, 2, 2, 1): 18,
            (2, 2, 3, 1): 1, (2, 2, 3, 2): 1,
            (4, 4, 4, 2): 1,
        }),
        "Total": (2, None, {
            (0, 1, 0, 0): 1,
            (2, 2, 2, 1): r,
            (2, 3, 1, 0): 1, (2, 3, 1, 1): 1, (2, 3, 2, 1): 18,
            (3, 3, 3, 1): r - 1, (3, 3, 3, 2): r - 1,
            (4, 4, 4, 2): r,
            (4, 5, 4, 2): 1,
        }),
        "Supported": (2, None, {
            (2, 1, 2, 1): 1,
            (2, 2, 2, 1): r,
            (3, 3, 3, 1): r - 1, (3, 3, 3, 2): r - 1,
            (4, 3, 4, 2): 18,
            (4, 3, 5, 2): 1, (4, 3, 5, 3): 1,
            (4, 4, 4, 2): r,
            (6, 5, 6, 3): 1,
        }),
    })


def type_iii(k):
    """Degeneration with rational components glued along anticanonical
    cycles, dual complex a 2k-triangle sphere; g below is k+1."""
    g = k + 1
    return _clean({
        "Xlim": (2, None, {
            (0, 0, 0, 0): 1,
            (2, 2, 0, 0): 1, (2, 2, 2, 1): 20, (2, 2, 4, 2): 1,
            (4, 4, 4, 2): 1,
        }),
        "Total": (2, None, {
            (0, 1, 0, 0): 1,
            (2, 2, 2, 1): g,
            (2, 3, 0, 0): 1, (2, 3, 2, 1): 19,
            (4, 4, 4, 2): g,
            (4, 5, 4, 2): 1,
        }),
        "Supported": (2, None, {
            (2, 1, 2, 1): 1,
            (2, 2, 2, 1): g,
            (4, 3, 4, 2): 19, (4, 3, 6, 3): 1,
            (4, 4, 4, 2): g,
            (6, 5, 6, 3): 1,
        }),
    })


# family spec -> (golden file name, oracle table set); the goldens under
# tests/golden are serialized from exactly these by scripts/rebuild_goldens.py
GOLDEN = [
    ("k3-elliptic:r=1", "elliptic_r1.json", elliptic(1)),
    ("k3-elliptic:r=2", "elliptic_r2.json", elliptic(2)),
    ("k3-elliptic:r=3", "elliptic_r3.json", elliptic(3)),
    ("k3-finite:g=2", "finite_g2.json", finite(2)),
    ("k3-finite:g=3", "finite_g3.json", finite(3)),
    ("k3-typeII:r=1", "typeII_r1.json", type_ii(1)),
    ("k3-typeII:r=2", "typeII_r2.json", type_ii(2)),
    ("k3-typeII:r=3", "typeII_r3.json", type_ii(3)),
    ("k3-typeIII:k=1", "typeIII_k1.json", type_iii(1)),
    ("k3-typeIII:k=2", "typeIII_k2.json", type_iii(2)),
]
