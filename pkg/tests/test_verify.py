from minbricks.enumerate import CatalogEntry
from minbricks.families import extremal_gn, k4, moebius_ladder, petersen, prism, wheel
from minbricks.graph import graph_from_edges
from minbricks.predicates import is_brick, is_minimal_brick
from minbricks.verify import (VerifyReport, check_non_minimal_example, is_sparse,
                              non_minimal_extension_example, verify_edge_bound,
                              verify_k4_prism_minor, verify_sparse_closure, verify_three_cubic)


def _entries(*graphs):
    return [CatalogEntry(g, g.canonical_key(), ()) for g in graphs]


def test_edge_bound_examples():
    rep = verify_edge_bound(_entries(prism(), wheel(8), extremal_gn(2), k4(), wheel(6)))
    assert rep.ok
    by_key = {r.key: r for r in rep.records}
    pr = by_key[prism().canonical_key().decode()]
    assert pr.exception_flag and pr.detail["margin"] == 1
    w8 = by_key[wheel(8).canonical_key().decode()]
    assert (w8.m, w8.bound) == (14, 13) and w8.exception_flag
    g2 = by_key[extremal_gn(2).canonical_key().decode()]
    assert (g2.m, g2.bound, g2.exception_flag, g2.passed) == (13, 13, False, True)
    assert rep.summary == {"checked": 5, "passed": 5, "exceptions": 4}


def test_edge_bound_catches_violation():
    # K6 on six vertices: 15 edges against a bound of 8, and not an exception
    k6 = graph_from_edges(6, [(i, j) for i in range(6) for j in range(i + 1, 6)])
    rep = verify_edge_bound(_entries(k6))
    assert not rep.ok and len(rep.failures()) == 1


def test_three_cubic():
    rep = verify_three_cubic(_entries(k4(), petersen()))
    assert rep.ok
    assert [r.detail["cubic_count"] for r in rep.records] == [4, 10]


def test_k4_prism_minor_small():
    for n in (4, 6):
        rep = verify_k4_prism_minor(n)
        assert rep.ok and rep.summary["checked"] >= 1


def test_sparse_examples():
    assert is_sparse(moebius_ladder(4))
    assert not is_sparse(wheel(6))


def test_sparse_closure_on_small_catalog(catalog10):
    samples = [e.graph for e in catalog10]
    rep = verify_sparse_closure(samples, samples)
    assert rep.ok
    ml = moebius_ladder(4)
    for r in rep.records:
        if r.detail["sparse_minor"] is not None:
            assert r.detail["sparse"]
    assert any(r.detail["sparse_minor"] for r in rep.records)
    assert ml.canonical_key() in catalog10


def test_non_minimal_example():
    ex = non_minimal_extension_example()
    assert is_brick(ex["G''"]) and is_brick(ex["G''-u1v1"])
    assert not is_minimal_brick(ex["G''"])
    assert check_non_minimal_example().ok


def test_report_json_consistency():
    rep = verify_three_cubic(_entries(k4()))
    d = rep.to_dict()
    assert d["pass"] is True and d["summary"]["checked"] == len(d["records"]) == 1
    assert rep.to_json() == VerifyReport("three-cubic", 4, rep.records).to_json()
