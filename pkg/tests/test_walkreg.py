"""Walk regularity vs the spherical/edge-isometric canonical-embedding test."""

import numpy as np
import pytest

from confrigid.catalog import catalog
from confrigid.errors import NotRegularError
from confrigid.graphs import circulant, laplacian
from confrigid.spectra import eigendecompose
from confrigid.walkreg import canonical_walk1_check, walk_regularity


def test_requires_regular():
    with pytest.raises(NotRegularError):
        walk_regularity(catalog("path_4"))


@pytest.mark.parametrize(
    "name,walk1",
    [
        ("petersen", True),
        ("hoffman", True),
        ("shrikhande_complement", True),
        ("triangular_prism", False),
        ("complete_4", True),
        ("cycle_6", True),
        ("hypercube_4", True),
    ],
)
def test_known_walk1_flags(name, walk1):
    rep = walk_regularity(catalog(name))
    assert rep.walk1 is walk1
    assert rep.walk0 or not walk1  # 1-walk-regular implies 0-walk-regular


def test_circulant_family_walk1_pattern():
    # within the family on Z_3n with connection set {1, n-1}: 1-walk-regular
    # exactly when n = -1 mod 3
    for n in range(6, 13):
        rep = walk_regularity(circulant(3 * n, {1, n - 1}))
        assert rep.walk1 is (n % 3 == 2), n


def test_agrees_with_canonical_check_on_catalog():
    for name in (
        "petersen",
        "hoffman",
        "triangular_prism",
        "cycle_5",
        "complete_5",
        "hypercube_3",
        "shrikhande_complement",
    ):
        g = catalog(name)
        dec = eigendecompose(laplacian(g))
        assert walk_regularity(g).walk1 == canonical_walk1_check(g, dec), name


def test_agrees_on_random_circulants():
    rng = np.random.default_rng(7)
    for _ in range(25):
        N = int(rng.integers(4, 37))
        ks = rng.choice(np.arange(1, N // 2 + 1), size=min(2, N // 2), replace=False)
        g = circulant(N, set(int(k) for k in ks))
        if not g.is_connected():
            continue
        dec = eigendecompose(laplacian(g))
        assert walk_regularity(g).walk1 == canonical_walk1_check(g, dec), g.name
