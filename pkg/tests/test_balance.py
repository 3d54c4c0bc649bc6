import random
from fractions import Fraction

import pytest

from liebalance.balance import (BalancednessInstance, is_balanced,
                                is_balanced_bruteforce)


def inst(k, ps, ns):
    return BalancednessInstance.make(k, ps, ns)


def test_single_positive_vector_unbalanced():
    cert = is_balanced(inst(1, [[1]], []))
    assert not cert.balanced
    assert cert.functional == (Fraction(1),)
    assert cert.verify(inst(1, [[1]], []))


def test_span_only_balanced():
    cert = is_balanced(inst(1, [], [[1]]))
    assert cert.balanced and cert.verify(inst(1, [], [[1]]))


def test_triangle_is_balanced():
    i = inst(2, [[1, 0], [-1, 1], [0, -1]], [])
    cert = is_balanced(i)
    assert cert.balanced
    assert all(c > 0 for c in cert.coefficients)
    assert cert.verify(i)


def test_zero_dimension_is_balanced():
    assert is_balanced(inst(0, [], [])).balanced


def test_empty_everything_unbalanced_in_positive_dimension():
    cert = is_balanced(inst(2, [], []))
    assert not cert.balanced


def test_rank_deficiency_detected():
    i = inst(2, [[1, 0], [-1, 0]], [])
    cert = is_balanced(i)
    assert not cert.balanced
    assert cert.verify(i)


def test_negating_p_preserves_unbalancedness():
    rng = random.Random(19)
    for _ in range(60):
        k = rng.randint(1, 3)
        ps = [[Fraction(rng.randint(-2, 2)) for _ in range(k)]
              for _ in range(rng.randint(1, 4))]
        ns = [[Fraction(rng.randint(-2, 2)) for _ in range(k)]
              for _ in range(rng.randint(0, 2))]
        a = is_balanced(inst(k, ps, ns))
        b = is_balanced(inst(k, [[-x for x in p] for p in ps], ns))
        assert a.balanced == b.balanced
        if not a.balanced:
            flipped = tuple(-x for x in a.functional)
            assert all(sum(f * x for f, x in zip(flipped, p)) >= 0
                       for p in [[-x for x in q] for q in ps])


def test_monotone_moving_p_to_n():
    rng = random.Random(23)
    for _ in range(80):
        k = rng.randint(1, 4)
        ps = [[Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(k)]
              for _ in range(rng.randint(1, 5))]
        ns = [[Fraction(rng.randint(-3, 3)) for _ in range(k)]
              for _ in range(rng.randint(0, 3))]
        before = is_balanced(inst(k, ps, ns)).balanced
        idx = rng.randrange(len(ps))
        moved = ps[:idx] + ps[idx + 1:]
        after = is_balanced(inst(k, moved, ns + [ps[idx]])).balanced
        if before:
            assert after, (ps, ns, idx)


def test_certificates_always_verify_and_match_bruteforce():
    rng = random.Random(77)
    for _ in range(250):
        k = rng.randint(1, 4)
        npv = rng.randint(0, 6)
        nnv = rng.randint(0, 5)

        def vec():
            return [Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                    for _ in range(k)]

        i = inst(k, [vec() for _ in range(npv)], [vec() for _ in range(nnv)])
        cert = is_balanced(i)
        assert cert.verify(i)
        assert cert.balanced == is_balanced_bruteforce(i)


def test_length_mismatch_rejected():
    with pytest.raises(ValueError):
        inst(2, [[1, 0, 0]], [])
