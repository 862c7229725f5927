"""End-to-end acceptance checks.

Each test covers one numbered criterion, prints a single PASS/FAIL line
(visible with pytest -s or in captured output on failure), and enforces
its runtime budget where one is stated.  Run the whole file with::

    pytest tests/test_acceptance.py -s
"""

import random
import time
from contextlib import contextmanager

from schurhopf import verify
from schurhopf.char_rings import Basis, tensor_product
from schurhopf.evaluate import (
    eval_schur_bialternant,
    eval_schur_tableaux,
    verify_cauchy,
)
from schurhopf.lr import lr_expand_product
from schurhopf.partition import Partition, partitions_up_to
from schurhopf.series import littlewood_series

P = Partition


@contextmanager
def criterion(num, desc, budget=None):
    t0 = time.perf_counter()
    try:
        yield
        dt = time.perf_counter() - t0
        if budget is not None and dt >= budget:
            raise AssertionError(
                f"time budget {budget}s exceeded: took {dt:.2f}s"
            )
    except BaseException:
        dt = time.perf_counter() - t0
        print(f"FAIL criterion {num:>2}: {desc} ({dt:.2f}s)")
        raise
    print(f"PASS criterion {num:>2}: {desc} ({dt:.2f}s)")


def _require(result):
    assert result.passed, f"{result.name}: {result.detail}"


def test_criterion_01_branching_goldens():
    with criterion(1, "branching golden tables reproduced exactly", budget=1.0):
        _require(verify.check_branching_goldens())


def test_criterion_02_tensor_goldens():
    with criterion(2, "tensor golden tables in GL, O, Sp", budget=5.0):
        _require(verify.check_tensor_goldens())
        o = tensor_product(P((2, 2)), P((2, 1)), Basis.O)
        assert len(list(o.items())) == 15
        for p in ((3, 2), (3, 1, 1), (2, 2, 1), (2, 1)):
            assert o.coefficient(P(p)) == 2, p
        gl = tensor_product(P((2, 2)), P((2, 1)), Basis.GL)
        assert len(list(gl.items())) == 6


def test_criterion_03_bd_series_lists():
    with criterion(3, "B and D series terms through degree 6, no odd terms"):
        b = littlewood_series("B", 8)
        d = littlewood_series("D", 8)
        assert dict(b.term(0).items()) == {P(()): 1}
        assert dict(b.term(2).items()) == {P((1, 1)): 1}
        assert dict(b.term(4).items()) == {P((2, 2)): 1, P((1, 1, 1, 1)): 1}
        assert dict(b.term(6).items()) == {
            P((3, 3)): 1, P((2, 2, 1, 1)): 1, P((1,) * 6): 1,
        }
        assert dict(d.term(0).items()) == {P(()): 1}
        assert dict(d.term(2).items()) == {P((2,)): 1}
        assert dict(d.term(4).items()) == {P((4,)): 1, P((2, 2)): 1}
        assert dict(d.term(6).items()) == {
            P((6,)): 1, P((4, 2)): 1, P((2, 2, 2)): 1,
        }
        for k in (1, 3, 5, 7):
            assert b.term(k).is_zero and d.term(k).is_zero, k


def test_criterion_04_series_inverses():
    with criterion(4, "A*B = C*D = unit and series_inverse(C) = D through 8"):
        _require(verify.check_series_inverses(8))


def test_criterion_05_ca_oracle():
    with criterion(5, "A and C hook construction matches product oracle through 8"):
        _require(verify.check_ca_oracle(8))


def test_criterion_06_skew_alternating_identity():
    with criterion(
        6, "alternating skew identity over all nu of weight <= 8", budget=60.0
    ):
        _require(verify.check_schur_identity(8))


def test_criterion_07_symm_hopf_axioms():
    with criterion(7, "Symm Hopf axiom suite at stated bounds", budget=120.0):
        for result in verify.suite_hopf():
            _require(result)


def test_criterion_08_diagonal_coproduct_and_generic_engine():
    with criterion(
        8, "reduced double coproducts diagonal; generic engine matches rules"
    ):
        _require(verify.check_delta_double_prime(6))
        _require(verify.check_generic_engine(4))


def test_criterion_09_osp_coincidence():
    with criterion(9, "O and Sp tensor tables coincide for weights <= 5"):
        _require(verify.check_osp_coincidence(5))


def test_criterion_10_char_ring_axioms():
    with criterion(
        10, "O/Sp character ring counitarity and antipode identity, weight <= 5"
    ):
        _require(verify.check_char_counitarity(5))
        _require(verify.check_char_antipode(5))


def test_criterion_11_evaluation_cross_check():
    with criterion(11, "tableaux vs bialternant at random points; Cauchy checks"):
        rng = random.Random(114)
        shapes = partitions_up_to(6)
        for _ in range(100):
            n = rng.randint(1, 4)
            xs = rng.sample([v for v in range(-25, 26) if v != 0], n)
            for lam in shapes:
                assert eval_schur_tableaux(lam, xs) == eval_schur_bialternant(
                    lam, xs
                ), (lam, xs)
        assert verify_cauchy(2, 2, 4)
        assert verify_cauchy(3, 2, 4)


def test_product_compatibility_numeric():
    # numeric spot check tying the structure constants to evaluation
    with criterion("+", "eval(x*y) = eval(x)*eval(y) at fixed points"):
        rng = random.Random(7)
        shapes = partitions_up_to(5)
        xs = [-3, 2, 5]
        for _ in range(25):
            a, b = rng.choice(shapes), rng.choice(shapes)
            prod = lr_expand_product(a, b)
            lhs = sum(
                c * eval_schur_tableaux(p, xs) for p, c in prod.items()
            )
            rhs = eval_schur_tableaux(a, xs) * eval_schur_tableaux(b, xs)
            assert lhs == rhs, (a, b)
