import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kronrep.errors import ArithmeticRangeError, DomainError, UnsupportedIndexError
from kronrep.roots import (
    CoxeterConvention,
    DimVector,
    RootTag,
    classify,
    coxeter,
    cover_thin_exists,
    imaginary_roots,
    in_fundamental_domain,
    is_positive_imaginary,
    preinjective_dims,
    preprojective_dims,
    reduce_to_fundamental_domain,
    reflect_sink,
    reflect_source,
    tits_form,
)

from oracles import roots_by_scan

FWD, INV = CoxeterConvention.FORWARD, CoxeterConvention.INVERSE


def test_tits_form_examples():
    assert tits_form(3, (1, 3)) == 1
    assert [tits_form(2, (m, m)) for m in range(1, 6)] == [0] * 5
    assert tits_form(3, (2, 2)) == -4


def test_tits_form_is_exact_for_large_entries():
    big = 2**30
    assert tits_form(3, (big, big)) == -(big**2)
    assert tits_form(5, (2**62, 1)) == 2**124 + 1 - 5 * 2**62


def test_non_integer_input_is_rejected():
    with pytest.raises(ArithmeticRangeError):
        tits_form(3, (1.5, 2))
    with pytest.raises(ArithmeticRangeError):
        tits_form(3, (True, 2))


def test_classify_examples():
    assert classify(3, (0, 1)).tag is RootTag.REAL
    assert classify(3, (1, 1)).tag is RootTag.IMAGINARY
    assert classify(3, (1, 4)) == (RootTag.NOT_A_ROOT, 5)
    assert classify(3, (0, 0)).tag is RootTag.NOT_A_ROOT


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_classify_matches_scan(n):
    scan = roots_by_scan(n, 25)
    for x in range(26):
        for y in range(26):
            rc = classify(n, (x, y))
            if (x, y) not in scan:
                assert rc.tag is RootTag.NOT_A_ROOT
            elif scan[(x, y)] == 1:
                assert rc.tag is RootTag.REAL
            else:
                assert rc.tag is RootTag.IMAGINARY


def test_reflection_examples():
    assert reflect_source(3, (1, 3)) == (8, 3)
    assert tits_form(3, (8, 3)) == 1
    assert reflect_source(3, (8, 3)) == (1, 3)
    for n in range(1, 6):
        assert reflect_source(n, (0, 0)) == (0, 0) == reflect_sink(n, (0, 0))
    assert reflect_sink(2, (1, 1)) == (1, 1)


def test_coxeter_examples():
    # reflect_source: (0,1) -> (3,1); reflect_sink: (3,1) -> (3, 9-1)
    assert coxeter(3, (0, 1), FWD) == (3, 8)
    assert tits_form(3, (3, 8)) == 1
    for m in range(1, 6):
        assert coxeter(2, (m, m), FWD) == (m, m)
        assert coxeter(2, (m, m), INV) == (m, m)


def test_coxeter_closed_form():
    for n in range(1, 7):
        for x in range(-5, 6):
            for y in range(-5, 6):
                assert coxeter(n, (x, y)) == (n * y - x, n * n * y - n * x - y)


coords = st.integers(min_value=-(10**4), max_value=10**4)
indices = st.integers(min_value=1, max_value=6)


@settings(max_examples=300)
@given(n=indices, x=coords, y=coords)
def test_form_invariance(n, x, y):
    q = tits_form(n, (x, y))
    assert tits_form(n, reflect_source(n, (x, y))) == q
    assert tits_form(n, reflect_sink(n, (x, y))) == q
    assert tits_form(n, coxeter(n, (x, y), FWD)) == q
    assert tits_form(n, coxeter(n, (x, y), INV)) == q


@settings(max_examples=300)
@given(n=indices, x=coords, y=coords)
def test_involutions_and_inverse(n, x, y):
    v = (x, y)
    assert reflect_source(n, reflect_source(n, v)) == v
    assert reflect_sink(n, reflect_sink(n, v)) == v
    assert coxeter(n, coxeter(n, v, FWD), INV) == v
    assert coxeter(n, coxeter(n, v, INV), FWD) == v


def test_fundamental_domain_examples():
    assert in_fundamental_domain(3, (2, 2))
    assert not in_fundamental_domain(3, (1, 3))
    assert in_fundamental_domain(2, (3, 3))
    assert not in_fundamental_domain(2, (3, 4))
    with pytest.raises(UnsupportedIndexError):
        in_fundamental_domain(1, (1, 1))


def test_n2_imaginary_roots_are_the_diagonal():
    scan = roots_by_scan(2, 40)
    imaginary = {v for v, q in scan.items() if q <= 0}
    assert imaginary == {(m, m) for m in range(1, 41)}
    assert all(in_fundamental_domain(2, v) for v in imaginary)


def _orbit_hits(n, v, steps):
    hits = []
    for conv, sign in ((FWD, 1), (INV, -1)):
        w = v
        for k in range(1, steps + 1):
            w = coxeter(n, w, conv)
            if in_fundamental_domain(n, w):
                hits.append((w, sign * k))
    if in_fundamental_domain(n, v):
        hits.append((v, 0))
    return hits


def test_reduce_examples():
    assert reduce_to_fundamental_domain(3, (2, 2)) == ((2, 2), 0)
    assert reduce_to_fundamental_domain(2, (4, 4)) == ((4, 4), 0)
    # (2,1) sits on the excluded lower boundary; one forward step gives (1,2)
    assert reduce_to_fundamental_domain(3, (2, 1)) == ((1, 2), 1)
    # (5,13) = coxeter(1,2)
    assert reduce_to_fundamental_domain(3, (5, 13)) == ((1, 2), -1)
    with pytest.raises(DomainError):
        reduce_to_fundamental_domain(3, (1, 3))
    with pytest.raises(DomainError):
        reduce_to_fundamental_domain(3, (0, 0))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_reduction_agrees_with_orbit_search(n):
    # exactly one orbit point of each root in the window lands in the domain
    for v in imaginary_roots(n, 40):
        hits = _orbit_hits(n, v, 12)
        assert len(hits) == 1, (v, hits)
        w, k = reduce_to_fundamental_domain(n, v)
        assert (w, k) == hits[0]
        conv = FWD if k >= 0 else INV
        assert not in_fundamental_domain(n, coxeter(n, w, conv))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_domain_inside_cover_thin_region(n):
    for x in range(31):
        for y in range(31 - x):
            if in_fundamental_domain(n, (x, y)):
                assert is_positive_imaginary(n, (x, y))
                assert cover_thin_exists(n, (x, y))


def _series_by_recursion(n, count):
    a = [0, 1]
    while len(a) < count + 1:
        a.append(n * a[-1] - a[-2])
    return [(a[i], a[i + 1]) for i in range(count)]


def test_preprojective_examples():
    assert preprojective_dims(3, 4) == [(0, 1), (1, 3), (3, 8), (8, 21)]
    assert preprojective_dims(2, 3) == [(0, 1), (1, 2), (2, 3)]
    for n in range(1, 6):
        assert preprojective_dims(n, 1) == [(0, 1)]


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_preprojective_series(n):
    dims = preprojective_dims(n, 12)
    assert dims == _series_by_recursion(n, 12)
    assert all(tits_form(n, v) == 1 for v in dims)
    assert len(set(dims)) == len(dims)
    totals = [v.total for v in dims]
    assert totals == sorted(set(totals))
    assert preinjective_dims(n, 12) == [(y, x) for x, y in dims]


def test_preprojective_errors():
    with pytest.raises(DomainError):
        preprojective_dims(3, 0)
    with pytest.raises(DomainError):
        preprojective_dims(1, 3)
    assert preprojective_dims(1, 2) == [(0, 1), (1, 1)]


def test_cover_thin_exists_examples():
    assert cover_thin_exists(3, (2, 5))
    assert not cover_thin_exists(3, (2, 6))
    assert cover_thin_exists(3, (1, 3))
    assert cover_thin_exists(3, (5, 2))
    assert cover_thin_exists(3, (1, 0))
    with pytest.raises(DomainError):
        cover_thin_exists(3, (0, 0))


def test_imaginary_roots_window():
    assert imaginary_roots(2, 6) == [DimVector(1, 1), DimVector(2, 2), DimVector(3, 3)]
    scan = roots_by_scan(3, 10)
    assert set(imaginary_roots(3, 10)) == {v for v, q in scan.items() if q <= 0 and sum(v) <= 10}
