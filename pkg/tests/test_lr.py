import pytest
from hypothesis import given, settings, strategies as st

from schurhopf import _lrkernel_py
from schurhopf import _oracle
from schurhopf import lr
from schurhopf.errors import WeightLimitError
from schurhopf.partition import Partition, partitions_of, partitions_up_to, set_weight_limit

try:
    from schurhopf import _lrkernel
except ImportError:
    _lrkernel = None


P = Partition


def small_partition(max_weight=8):
    return st.sampled_from(partitions_up_to(max_weight))


def test_coefficient_known_values():
    # enumerated by the polynomial oracle, frozen here
    assert lr.lr_coefficient(P((1,)), P((1, 1)), P((2, 1))) == 1
    assert lr.lr_coefficient(P((2, 1)), P((2, 1)), P((3, 2, 1))) == 2
    assert lr.lr_coefficient(P((2, 1)), P((2, 1)), P((4, 2))) == 1
    assert lr.lr_coefficient(P((2, 1)), P((2, 1)), P((2, 2, 1, 1))) == 1


def test_coefficient_unit_law():
    for lam in partitions_up_to(5):
        assert lr.lr_coefficient(lam, P(()), lam) == 1


def test_coefficient_zero_on_weight_mismatch():
    assert lr.lr_coefficient(P((2,)), P((1,)), P((2,))) == 0
    assert lr.lr_coefficient(P((2,)), P((1,)), P((4,))) == 0


def test_coefficient_zero_on_containment_failure():
    assert lr.lr_coefficient(P((3,)), P((1,)), P((2, 2))) == 0


def test_product_expansion_table_row():
    got = lr.product_expansion(P((2, 2)), P((2, 1)))
    assert got == {
        P((4, 3)): 1,
        P((4, 2, 1)): 1,
        P((3, 3, 1)): 1,
        P((3, 2, 2)): 1,
        P((3, 2, 1, 1)): 1,
        P((2, 2, 2, 1)): 1,
    }


def test_product_expansion_basics():
    assert lr.product_expansion(P((1,)), P((1,))) == {P((2,)): 1, P((1, 1)): 1}
    assert lr.product_expansion(P(()), P((3, 1))) == {P((3, 1)): 1}


def test_skew_expansion_examples():
    assert lr.skew_expansion(P((2, 1)), P((1,))) == {P((2,)): 1, P((1, 1)): 1}
    assert lr.skew_expansion(P((3, 1)), P(())) == {P((3, 1)): 1}
    assert lr.skew_expansion(P((1,)), P((2,))) == {}


def test_oracle_equivalence_exhaustive():
    # brute-force polynomial multiplication, weights up to 6 total
    for total in range(7):
        for wa in range(total + 1):
            for lam in partitions_of(wa):
                for mu in partitions_of(total - wa):
                    expect = _oracle.product_in_schur_basis(lam, mu)
                    assert lr.product_expansion(lam, mu) == expect, (lam, mu)


def test_skew_against_coproduct_duality():
    for nu in partitions_up_to(6):
        for lam in partitions_up_to(nu.weight):
            table = lr.skew_expansion(nu, lam)
            for mu, c in table.items():
                assert lr.lr_coefficient(lam, mu, nu) == c


@pytest.mark.skipif(_lrkernel is None, reason="compiled kernel unavailable")
def test_kernels_agree_on_products():
    for total in range(9):
        for wa in range(total + 1):
            for lam in partitions_of(wa):
                for mu in partitions_of(total - wa):
                    a = _lrkernel.expand_product(tuple(lam), tuple(mu))
                    b = _lrkernel_py.expand_product(tuple(lam), tuple(mu))
                    assert a == b, (lam, mu)


@pytest.mark.skipif(_lrkernel is None, reason="compiled kernel unavailable")
def test_kernels_agree_on_skews():
    for outer in partitions_up_to(7):
        for inner in partitions_up_to(outer.weight):
            if not outer.contains(inner):
                continue
            a = _lrkernel.expand_skew(tuple(outer), tuple(inner))
            b = _lrkernel_py.expand_skew(tuple(outer), tuple(inner))
            assert a == b, (outer, inner)


def test_deep_shapes_use_python_fallback():
    # more rows than the compiled kernel accepts; inner is neither a single
    # row nor a column, so this cannot take a Pieri shortcut
    set_weight_limit(100)
    try:
        tall = P((2, 2) + (1,) * 77)
        inner = P((2,) + (1,) * 76)
        got = lr.skew_expansion(tall, inner)
        expect = _lrkernel_py.expand_skew(tuple(tall), tuple(inner))
        assert got == {P(k): v for k, v in expect.items()}
        assert sum(got.values()) > 0
    finally:
        set_weight_limit(64)


@given(small_partition(5), small_partition(5))
@settings(max_examples=60, deadline=None)
def test_product_symmetry_and_grading(lam, mu):
    ab = lr.product_expansion(lam, mu)
    ba = lr.product_expansion(mu, lam)
    assert ab == ba
    total = lam.weight + mu.weight
    assert all(nu.weight == total for nu in ab)
    assert all(c > 0 for c in ab.values())


def test_conjugation_symmetry():
    for total in range(9):
        for wa in range(total + 1):
            for lam in partitions_of(wa):
                for mu in partitions_of(total - wa):
                    direct = lr.product_expansion(lam, mu)
                    flipped = lr.product_expansion(lam.conjugate(), mu.conjugate())
                    assert {nu.conjugate(): c for nu, c in direct.items()} == flipped


def test_associativity():
    for total in range(10):
        for wa in range(total + 1):
            for wb in range(total - wa + 1):
                for lam in partitions_of(wa):
                    for mu in partitions_of(wb):
                        for nu in partitions_of(total - wa - wb):
                            left = {}
                            for p, c in lr.product_expansion(lam, mu).items():
                                for q, d in lr.product_expansion(p, nu).items():
                                    left[q] = left.get(q, 0) + c * d
                            right = {}
                            for p, c in lr.product_expansion(mu, nu).items():
                                for q, d in lr.product_expansion(lam, p).items():
                                    right[q] = right.get(q, 0) + c * d
                            assert left == right, (lam, mu, nu)


def test_pieri_row_fast_path_matches_general():
    for nu in partitions_up_to(7):
        for r in range(1, nu.weight + 1):
            got = lr.skew_expansion(nu, P((r,)))
            expect = _lrkernel_py.expand_skew(tuple(nu), (r,))
            assert got == {P(k): v for k, v in expect.items()}, (nu, r)


def test_pieri_column_fast_path_matches_general():
    for nu in partitions_up_to(7):
        for r in range(1, nu.weight + 1):
            col = P((1,) * r)
            got = lr.skew_expansion(nu, col)
            expect = _lrkernel_py.expand_skew(tuple(nu), tuple(col))
            assert got == {P(k): v for k, v in expect.items()}, (nu, r)


def test_product_weight_limit_is_graceful():
    set_weight_limit(12)
    try:
        with pytest.raises(WeightLimitError):
            lr.product_expansion(P((7,)), P((6,)))
    finally:
        set_weight_limit(64)


def test_cache_utilities():
    lr.clear_caches()
    lr.product_expansion(P((2, 1)), P((1,)))
    info = lr.cache_info()
    assert any(v.misses > 0 for v in info.values())
    lr.clear_caches()
    info = lr.cache_info()
    assert all(v.hits == 0 and v.misses == 0 for v in info.values())


def test_kernel_name_reports_backend():
    assert lr.kernel_name() in ("cython", "python")
