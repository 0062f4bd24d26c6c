"""Shared fixtures: an isolated home per test, the small catalogue and worked candidates."""

from importlib import resources

import pytest

from mixedsurf.config import get_settings
from mixedsurf.covers import GeneratingVector
from mixedsurf.db import init_db
from mixedsurf.db.session import get_engine
from mixedsurf.extensions import make_extension
from mixedsurf.groups import (
    NamedGroupDescriptor,
    build_group,
    construct_named,
    generated_subgroup,
    load_packaged_catalogue,
)
from mixedsurf.groups.catalogue import PACKAGED_CATALOGUE
from mixedsurf.surfaces import MixedData


@pytest.fixture(autouse=True)
def isolated_test_db(tmp_path, monkeypatch):
    """Point MIXEDSURF_HOME_DIR at tmp_path with a fresh run store.

    The home starts with the packaged orders 1..8 as its user catalogue, so commands
    resolving the default catalogue never trigger a full build.
    """
    monkeypatch.setenv("MIXEDSURF_HOME_DIR", str(tmp_path))
    get_engine.cache_clear()
    get_settings.cache_clear()

    settings = get_settings()
    settings.ensure_directories()
    init_db()
    packaged = resources.files("mixedsurf.data").joinpath(PACKAGED_CATALOGUE)
    settings.catalogue_path.write_bytes(packaged.read_bytes())

    yield settings

    get_engine.cache_clear()
    get_settings.cache_clear()


@pytest.fixture
def repo(isolated_test_db):
    from mixedsurf.db import Repository

    repository = Repository()
    yield repository
    repository.close()


@pytest.fixture(scope="session")
def catalogue():
    """The catalogue shipped with the package (orders 1..8)."""
    return load_packaged_catalogue()


def cyclic_pair(n):
    """Z_n inside Z_2n as the even powers, tau' the generator."""
    cycle = list(range(2, 2 * n + 1)) + [1]
    group = build_group([cycle], label=f"Z{2 * n}")
    sub = generated_subgroup(group, [2])
    return make_extension(group, sub, tau_prime=1)


@pytest.fixture
def z2_in_z4():
    return cyclic_pair(2)


@pytest.fixture
def z4_in_z8():
    return cyclic_pair(4)


@pytest.fixture
def k2_eight_data(z2_in_z4):
    """G0 = Z2, G = Z4, signature (2; -)."""
    vector = GeneratingVector(2, (1, 0, 0, 1), (), z2_in_z4.g0)
    return MixedData.build(vector, z2_in_z4)


@pytest.fixture
def k2_two_data(z2_in_z4):
    """G0 = Z2, G = Z4, signature (1; 2, 2) with h1 = h2 = t."""
    vector = GeneratingVector(1, (0, 0), (1, 1), z2_in_z4.g0)
    return MixedData.build(vector, z2_in_z4)


@pytest.fixture
def k2_four_data(z4_in_z8):
    """G0 = Z4, G = Z8, signature (1; 2, 2) with a of order 4."""
    g0 = z4_in_z8.g0
    vector = GeneratingVector(1, (1, 0), (2, 2), g0)
    return MixedData.build(vector, z4_in_z8)


@pytest.fixture
def k2_six_data():
    """G0 = D5 inside G = D_{4,5,2} (order 20), signature (1; 5), tau' = x."""
    group = construct_named(NamedGroupDescriptor.metacyclic(4, 5, 2))
    x, y = group.generators
    x2 = group.mul[x][x]
    ext = make_extension(group, generated_subgroup(group, [x2, y]), tau_prime=x)
    g0 = ext.g0
    a, b = ext.from_g(x2), ext.from_g(y)
    h = g0.inverse[g0.commutator(a, b)]
    return MixedData.build(GeneratingVector(1, (a, b), (h,), g0), ext)


@pytest.fixture
def q8_data(catalogue):
    """G0 = Z4 inside Q8 (phi is inversion), signature (0; 2, 2, 4, 4)."""
    entries, _ = catalogue.groups_of_order(8)
    q8 = next(e.group for e in entries if e.label == "Q8")
    x = q8.elements_of_order(4)[0]
    ext = make_extension(q8, generated_subgroup(q8, [x]))
    g0 = ext.g0
    t = g0.elements_of_order(2)[0]
    u = g0.elements_of_order(4)[0]
    vector = GeneratingVector(0, (), (t, t, u, g0.inverse[u]), g0)
    return MixedData.build(vector, ext)
