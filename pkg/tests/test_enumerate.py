import json

import pytest

from minbricks.enumerate import (Catalog, CatalogEntry, EnumerationError, conjecture_stats, generate_minimal_bricks,
                                 labeled_graphs, oracle_enumerate_bricks,
                                 oracle_enumerate_minimal_bricks, replay_provenance, seed_of)
from minbricks.families import extremal_gn, k4, moebius_ladder, petersen, prism, staircase, wheel
from minbricks.predicates import is_minimal_brick


def test_generate_four_and_six():
    assert set(generate_minimal_bricks(4).entries) == {k4().canonical_key()}
    assert set(generate_minimal_bricks(6).entries) == {
        k4().canonical_key(), prism().canonical_key(), wheel(6).canonical_key()}


@pytest.mark.parametrize("bad", [3, 2, 18, 7])
def test_generate_rejects_budget(bad):
    with pytest.raises(EnumerationError):
        generate_minimal_bricks(bad)


def test_oracle_small():
    assert oracle_enumerate_minimal_bricks(4) == {k4().canonical_key()}
    assert oracle_enumerate_minimal_bricks(6) == {prism().canonical_key(), wheel(6).canonical_key()}
    with pytest.raises(EnumerationError):
        oracle_enumerate_bricks(10)


def test_labeled_graph_count():
    assert sum(1 for _ in labeled_graphs(4)) == 64


def test_oracle_eight_contains_named_graphs():
    keys = oracle_enumerate_minimal_bricks(8)
    for g in (extremal_gn(2), wheel(8), moebius_ladder(4), staircase(5)):
        assert is_minimal_brick(g)
        assert g.canonical_key() in keys


def test_catalog_soundness_and_provenance(catalog10):
    assert petersen().canonical_key() in catalog10
    for e in catalog10:
        assert is_minimal_brick(e.graph)
        assert replay_provenance(e, catalog10).canonical_key() == e.key
        seed = seed_of(e, catalog10)
        assert (seed == "petersen-seed") == (e.key == petersen().canonical_key())


def test_catalog_without_petersen():
    cat = generate_minimal_bricks(10, include_petersen=False)
    assert petersen().canonical_key() not in cat


def test_catalog_round_trip(tmp_path, catalog8):
    path = tmp_path / "cat.g6"
    catalog8.write(str(path))
    back = Catalog.read(str(path))
    assert set(back.entries) == set(catalog8.entries)
    for e in back:
        assert replay_provenance(e, back).canonical_key() == e.key
    lines = (tmp_path / "cat.jsonl").read_text().splitlines()
    assert len(lines) == len(catalog8)
    rec = json.loads(lines[0])
    assert set(rec) == {"key", "n", "m", "cubic_count", "provenance"}


def test_ordering(catalog8):
    order = [(e.vertex_count, e.key) for e in catalog8]
    assert order == sorted(order)


def test_threads_do_not_change_output():
    a = generate_minimal_bricks(8, threads=1)
    b = generate_minimal_bricks(8, threads=2)
    assert [e.sidecar_record() for e in a] == [e.sidecar_record() for e in b]


def test_conjecture_stats():
    assert conjecture_stats(generate_minimal_bricks(4))["min_ratio"] == 1.0
    n = 3
    g = extremal_gn(n)
    cat = Catalog(10)
    cat.entries[g.canonical_key()] = CatalogEntry(g, g.canonical_key(), ())
    assert conjecture_stats(cat)["min_ratio"] == pytest.approx((2 * n + 1) / (2 * n + 4))


def test_stats_on_eight(catalog8):
    stats = conjecture_stats(catalog8)
    assert stats["min_cubic_count"] >= 3
    assert stats["entries"] == len(catalog8)
