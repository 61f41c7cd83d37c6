import functools
import os
import shutil

import pytest

from finring import atlas, freealg, graphs, rings, scenarios, structure

PUBLIC_OPS = {
    rings: [
        "make_ring",
        "zn",
        "gf",
        "n0",
        "np2",
        "npp",
        "ap",
        "ap0",
        "zpx_mod_x2",
        "direct_sum",
        "matrix_ring",
        "quotient",
        "subring_generated",
        "characteristic",
    ],
    structure: [
        "zero_divisors",
        "units",
        "idempotents",
        "nilpotent_elements",
        "has_identity",
        "ideals",
        "jacobson_radical",
        "is_nilpotent_ring",
        "is_subdirectly_irreducible",
        "is_local",
        "is_field",
        "decompose",
        "ring_isomorphic",
        "ring_canonical_certificate",
    ],
    graphs: [
        "zero_divisor_graph",
        "is_complete",
        "canonical_form",
        "graph_isomorphic",
        "export_dot",
    ],
    freealg: [
        "parse",
        "render",
        "add",
        "mul",
        "scale",
        "substitute",
        "lower_degree",
        "essentially_depends",
        "evaluate",
        "satisfies_identity",
    ],
    atlas: [
        "abelian_group_types",
        "enumerate_rings",
        "rings_with_graph",
        "graph_determinacy_report",
        "save_atlas",
        "load_atlas",
    ],
}


def test_every_scenario_passes():
    cache = scenarios.AtlasCache()
    assert scenarios.run("prop5", p=2).passed
    assert scenarios.run("prop5", p=3).passed
    assert scenarios.run("prop5", p=5).passed
    assert scenarios.run("tn4-identities").passed
    assert scenarios.run("cor1", cache=cache).passed
    assert scenarios.run("prop4-counterexample", cache=cache).passed
    assert scenarios.run("theorem3-shape", cache=cache).passed


def test_unknown_scenario():
    with pytest.raises(ValueError):
        scenarios.run("nope")


def test_scenarios_cover_public_surface(atlas_dir, tmp_path, monkeypatch):
    # the five scenarios, run together against a cache that is missing one
    # order, must touch every public operation of the library
    counts: dict[str, int] = {}

    def wrap(module, name):
        original = getattr(module, name)

        @functools.wraps(original)
        def counted(*args, **kwargs):
            counts[name] = counts.get(name, 0) + 1
            return original(*args, **kwargs)

        monkeypatch.setattr(module, name, counted)

    for module, names in PUBLIC_OPS.items():
        for name in names:
            wrap(module, name)

    cache_dir = tmp_path / "cache"
    cache_dir.mkdir()
    for n in (1, 2, 3, 4, 5, 6, 7, 9):
        shutil.copy(os.path.join(atlas_dir, f"atlas-{n}.txt"), cache_dir)

    cache = scenarios.AtlasCache(str(cache_dir))
    for name, kwargs in (
        ("cor1", {"cache": cache}),
        ("prop5", {"p": 2}),
        ("prop4-counterexample", {"cache": cache}),
        ("tn4-identities", {}),
        ("theorem3-shape", {"cache": cache}),
    ):
        result = scenarios.run(name, **kwargs)
        assert result.passed, (name, result.lines)

    missing = [
        name
        for module, names in PUBLIC_OPS.items()
        for name in names
        if counts.get(name, 0) == 0
    ]
    assert missing == []


def test_cache_round_trip(tmp_path):
    cache = scenarios.AtlasCache(str(tmp_path))
    first = cache.get(4)
    assert os.path.exists(tmp_path / "atlas-4.txt")
    fresh = scenarios.AtlasCache(str(tmp_path))
    second = fresh.get(4)
    assert [e.certificate for e in first] == [e.certificate for e in second]
