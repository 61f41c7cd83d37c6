import os

import pytest

from finring import atlas


@pytest.fixture(scope="session")
def atlas_by_order():
    """Entries for every order 1..9, computed once per test session."""
    return {n: atlas.enumerate_rings(n) for n in range(1, 10)}


@pytest.fixture(scope="session")
def atlas_dir(tmp_path_factory, atlas_by_order):
    """Directory of saved atlas files for orders 1..9."""
    directory = tmp_path_factory.mktemp("atlas")
    for n, entries in atlas_by_order.items():
        atlas.save_atlas(entries, os.path.join(directory, f"atlas-{n}.txt"))
    return directory
