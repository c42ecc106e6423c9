import random
from fractions import Fraction

import pytest

from localroots.arith import first_primes
from localroots.global_rational import (
    finite_order_coprimality,
    global_root_witness,
    global_roots_all_orders,
    global_unipotent_power,
    verify_coprimality_witnesses,
)
from localroots.laurent import LaurentScalar
from localroots.matrices import QQ, LocalMatrix, laurent_field, padic_field, power_map
from localroots.power_lab import is_unipotent

from helpers import block_diag, companion_q, random_rational_matrix, random_unipotent

F = Fraction


def m(rows, fld=QQ):
    return LocalMatrix.of(fld, rows)


ROT = m([[0, -1], [1, 0]])
PHI5 = companion_q([1, 1, 1, 1, 1])


def test_global_exponent_examples():
    r = global_unipotent_power(LocalMatrix.identity(QQ, 2), [2, 3, 5])
    assert r.exponent == 1 and all(e.exponent == 1 for e in r.entries)
    r = global_unipotent_power(ROT, [3, 5, 7])
    assert r.exponent == 4 and [e.exponent for e in r.entries] == [4, 4, 4]
    assert r.order == 4
    r = global_unipotent_power(m([[2, 0], [0, 1]]), first_primes(4))
    assert r.exponent is None and all(e.exponent is None for e in r.entries)
    assert [e.is_distal for e in r.entries] == [False, True, True, True]
    assert r.order == "infinite"


def test_global_exponent_rejects_bad_input():
    with pytest.raises(ValueError):
        global_unipotent_power(ROT, [])
    with pytest.raises(ValueError):
        global_unipotent_power(ROT, [4])
    with pytest.raises(ValueError):
        global_unipotent_power(ROT.with_field(padic_field(5)), [5])
    with pytest.raises(ValueError):
        global_unipotent_power(m([[1, 1], [1, 1]]), [2])


def test_exponents_agree_across_primes():
    rng = random.Random(20)
    for _ in range(20):
        M = random_rational_matrix(rng, rng.randint(1, 3))
        r = global_unipotent_power(M, first_primes(5))
        assert len({e.exponent for e in r.entries}) == 1
        assert r.is_unipotent == is_unipotent(M)


def test_global_all_orders_examples():
    assert global_roots_all_orders(m([[1, 1], [0, 1]])) == "yes"
    assert global_roots_all_orders(m([[4, 0], [0, 1]])) == "no"
    assert global_roots_all_orders(LocalMatrix.identity(QQ, 3)) == "yes"
    fld = laurent_field(2)
    t = LaurentScalar.uniformizer(fld.profile)
    assert global_roots_all_orders(m([[1, t], [0, 1]], fld)) == "no"
    assert global_roots_all_orders(LocalMatrix.identity(fld, 2)) == "yes"
    with pytest.raises(ValueError):
        global_roots_all_orders(ROT.with_field(padic_field(5)))


def test_yes_verdicts_come_with_rational_witnesses():
    rng = random.Random(21)
    for _ in range(10):
        U = random_unipotent(rng, rng.randint(1, 4))
        assert global_roots_all_orders(U) == "yes"
        for k in range(1, 11):
            W = global_root_witness(U, k)
            assert all(isinstance(x, Fraction) for row in W.entries for x in row)
            assert power_map(W, k).equals(U)


def test_coprimality_examples():
    res = finite_order_coprimality(PHI5, 2, 3)
    assert res.status == "consistent" and res.order == 5
    assert [a for _, a, _ in res.witnesses] == [3, 4, 2]
    assert verify_coprimality_witnesses(PHI5, res)
    neg = finite_order_coprimality(m([[-1]]), 2, 3)
    assert neg.status == "violated" and neg.blocked_depth == 1 and not neg.witnesses
    ident = finite_order_coprimality(LocalMatrix.identity(QQ, 2), 7, 2)
    assert ident.status == "consistent" and ident.order == 1
    assert verify_coprimality_witnesses(LocalMatrix.identity(QQ, 2), ident)
    with pytest.raises(ValueError):
        finite_order_coprimality(m([[2]]), 2, 1)


def test_coprimality_in_char_p():
    fld = laurent_field(2)
    t = LaurentScalar.uniformizer(fld.profile)
    U = m([[1, t], [0, 1]], fld)
    assert finite_order_coprimality(U, 2, 2).status == "violated"
    res = finite_order_coprimality(U, 3, 3)
    assert res.status == "consistent" and verify_coprimality_witnesses(U, res)


def _brute_cyclic_roots(M, d, q, k):
    target = q**k
    return [j for j in range(d) if power_map(power_map(M, j), target).equals(M)]


def test_coprimality_matches_brute_force():
    rng = random.Random(22)
    pool = [[1, 1], [1, 1, 1], [1, 0, 1], [1, -1, 1], [1, 1, 1, 1, 1], [-1, 1]]
    for _ in range(15):
        blocks = [companion_q(rng.choice(pool)) for _ in range(rng.randint(1, 2))]
        M = block_diag(QQ, blocks)
        for q in (2, 3, 5):
            res = finite_order_coprimality(M, q, 2)
            found = _brute_cyclic_roots(M, res.order, q, 1)
            assert (res.status == "consistent") == bool(found)
            for k, a, W in res.witnesses:
                assert a in _brute_cyclic_roots(M, res.order, q, k)
