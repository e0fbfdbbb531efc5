#!/usr/bin/env python3
"""Smoke tests for the python bindings."""

import bott


def test_matrix_roundtrip():
    m = bott.Matrix.from_hex("3:5")
    assert m.to_bin() == "010\n001\n000"
    assert bott.Matrix.from_bin("010/001/000") == m
    assert m.n == 3 and m.arc(0, 1) and not m.arc(1, 0)
    assert "3:5" in repr(m)
    assert hash(m) == hash(bott.Matrix.from_hex("3:5"))


def test_validity():
    assert bott.is_bott("010/001/000")
    assert not bott.is_bott("010/001/100")
    try:
        bott.Matrix.from_bin("010/001/100")
    except bott.DomainError:
        pass
    else:
        raise AssertionError("cyclic matrix must be rejected")


def test_operations():
    m = bott.Matrix.from_bin("011/001/000")
    assert bott.local_complement(m, 1) == bott.Matrix.from_bin("010/001/000")
    assert bott.relabel(m, [0, 2, 1]) == bott.Matrix.from_bin("011/000/010")
    s = bott.Matrix.from_bin("001/001/000")
    assert bott.slide_allowed(s, 0, 1)
    assert bott.slide(s, 0, 1) == bott.Matrix.from_bin("001/000/000")


def test_canonical_forms():
    path = bott.Matrix.from_hex("3:5")
    tournament = bott.Matrix.from_hex("3:7")
    canon, orbit_size = bott.bott_canon(tournament)
    assert canon == path and orbit_size == 2
    assert bott.bott_equivalent(path, tournament)
    assert not bott.bott_equivalent(path, bott.Matrix.from_hex("3:6"))
    assert len(bott.bott_orbit(tournament)) == 2
    form, witness = bott.iso_canon(bott.Matrix.from_bin("000/100/010"))
    assert form == path and sorted(witness) == [0, 1, 2]


def test_classification():
    summary = bott.classify_all(3, workers=2)
    assert (summary.D, summary.O, summary.S) == (4, 2, 0)
    assert sorted(r.members for r in summary.records) == [1, 1, 2, 4]
    stream = bott.classify_stream(bott.delta_family(4))
    assert stream.D == 2


def test_invariants():
    path = bott.Matrix.from_hex("3:5")
    fp = bott.fingerprint(path)
    assert fp["type"] == [1, 1, 1]
    assert fp["rank"] == 2
    assert fp["odd_height"] == 1
    assert fp["betti"] == [1, 1, 0, 0]
    assert bott.fingerprint(bott.Matrix.zero(2))["odd_height"] == "inf"
    assert bott.betti(bott.Matrix.zero(3)) == [1, 3, 3, 1]
    assert bott.orientable(bott.Matrix.zero(3))
    assert bott.symplectic(bott.Matrix.zero(2))


def test_decomposition():
    two_roots = bott.Matrix.from_bin("010/000/010")
    d = bott.decompose(two_roots)
    assert d["isolated"] == 1 and d["factors"] == ["2:1"]
    assert not bott.is_indecomposable(two_roots)
    assert bott.is_indecomposable(bott.Matrix.from_hex("3:5"))
    assert bott.roots(two_roots) == [0, 2]
    assert len(bott.connected_components(two_roots)) == 1


def test_cohomology():
    a = bott.Matrix.from_bin("011/001/000")
    assert bott.rings_isomorphic(a, bott.Matrix.from_hex("3:5"))
    eigen = bott.eigen_elements(a)
    assert eigen[0][0] == "0"
    assert [e[2] for e in eigen] == [1, 1, 1]


def test_digraph6():
    arc = bott.parse_digraph6("&AO")
    assert arc.to_bin() == "01\n00"
    assert bott.encode_digraph6(arc) == "&AO"
    try:
        bott.parse_digraph6("&AW")
    except bott.DomainError:
        pass
    else:
        raise AssertionError("cyclic digraph6 record must be rejected")


def test_budget():
    try:
        bott.bott_canon(bott.Matrix.from_hex("3:5"), orbit_budget=1)
    except bott.BudgetError:
        pass
    else:
        raise AssertionError("budget must be enforced")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            fn()
            print(f"ok {name}")
    print("all python smoke tests passed")
