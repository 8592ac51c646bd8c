import random
import unittest
from math import gcd

import pytest

from tools.lattice import (
    WALL_CLASS,
    bbf_pair,
    bbf_square,
    delta_square,
    discriminant,
    divisibility,
    genus_two_lattice,
    hdelta_to_hl,
    hl_as_general,
    hl_pair,
    hl_square,
    hl_to_hdelta,
    is_primitive,
    k3n_discriminant,
)
from util.exceptions import MismatchedAmbientError, RankUnsupportedError, ZeroClassError
from util.models import GeneralClass, GramLattice, HLClass


def _g(a, b, d0=1, n=2, tag="lambda"):
    return GeneralClass(a=a, b=b, d0=d0, n=n, lambda_tag=tag)


H = _g(1, 0)
W = _g(2, -3)


class TestBbfSquare(unittest.TestCase):

    def test_h(self):
        self.assertEqual(bbf_square(H), 2)

    def test_delta_for_any_d0(self):
        for d0 in (-3, 0, 1, 7):
            self.assertEqual(bbf_square(_g(0, 1, d0=d0)), -2)

    def test_zero_class(self):
        self.assertEqual(bbf_square(_g(0, 0, d0=5, n=4)), 0)

    def test_h_plus_l(self):
        self.assertEqual(bbf_square(_g(2, -1)), 6)

    def test_delta_square_depends_on_n(self):
        self.assertEqual(delta_square(2), -2)
        self.assertEqual(delta_square(5), -8)


class TestBbfPair(unittest.TestCase):

    def test_h_w(self):
        self.assertEqual(bbf_pair(H, W), 4)

    def test_wall_ray_orthogonal_to_w(self):
        self.assertEqual(bbf_pair(_g(3, -2), W), 0)

    def test_l_w(self):
        self.assertEqual(bbf_pair(_g(1, -1), W), -2)

    def test_mismatched_n(self):
        with self.assertRaises(MismatchedAmbientError) as ctx:
            bbf_pair(_g(1, 0, n=2), _g(1, 0, n=3))
        self.assertEqual(ctx.exception.code, "MISMATCHED_AMBIENT")
        self.assertEqual(ctx.exception.details, {"field": "n"})

    def test_mismatched_lambda(self):
        with self.assertRaises(MismatchedAmbientError):
            bbf_pair(_g(1, 0, tag="lambda"), _g(1, 0, tag="mu"))

    def test_mismatched_d0(self):
        with self.assertRaises(MismatchedAmbientError):
            bbf_pair(_g(1, 0, d0=1), _g(1, 0, d0=2))


def test_bilinearity_and_square_consistency():
    rng = random.Random(20240613)
    for _ in range(500):
        n = rng.randint(2, 6)
        d0 = rng.randint(-10, 10)
        alpha, beta, gamma = (_g(rng.randint(-50, 50), rng.randint(-50, 50), d0=d0, n=n) for _ in range(3))
        assert bbf_pair(alpha + beta, gamma) == bbf_pair(alpha, gamma) + bbf_pair(beta, gamma)
        assert bbf_pair(alpha, beta) == bbf_pair(beta, alpha)
        assert bbf_square(alpha) == bbf_pair(alpha, alpha)
        assert bbf_square(alpha) % 2 == 0


def test_adding_over_different_ambients_is_rejected():
    with pytest.raises(MismatchedAmbientError):
        _g(1, 0, n=2) + _g(1, 0, n=3)


class TestDivisibility(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(divisibility(H), 1)
        self.assertEqual(divisibility(W), 2)
        self.assertEqual(divisibility(_g(2, -1)), 2)

    def test_delta(self):
        for n in range(2, 8):
            self.assertEqual(divisibility(_g(0, 1, n=n)), 2 * (n - 1))

    def test_zero_class(self):
        with self.assertRaises(ZeroClassError) as ctx:
            divisibility(_g(0, 0))
        self.assertEqual(ctx.exception.code, "ZERO_CLASS")

    def test_scaling(self):
        rng = random.Random(7)
        for _ in range(300):
            c = _g(rng.randint(-30, 30), rng.randint(-30, 30), n=rng.randint(2, 5))
            if c.is_zero:
                continue
            k = rng.choice([-3, -2, -1, 1, 2, 5])
            self.assertEqual(divisibility(c.scaled(k)), abs(k) * divisibility(c))


def _pairing_oracle(c: GeneralClass) -> int:
    """div from explicit pairings in U + Z*delta, lambda = e + d0*f"""
    gram = [[0, 1, 0], [1, 0, 0], [0, 0, delta_square(c.n)]]
    alpha = [c.a, c.a * c.d0, c.b]
    pairings = [sum(alpha[i] * gram[i][j] for i in range(3)) for j in range(3)]
    return gcd(*pairings)


def test_divisibility_agrees_with_pairing_oracle():
    rng = random.Random(1000)
    checked = 0
    while checked < 1000:
        c = _g(rng.randint(-500, 500), rng.randint(-500, 500), d0=rng.randint(-20, 20), n=rng.randint(2, 9))
        if c.is_zero:
            continue
        assert divisibility(c) == _pairing_oracle(c)
        checked += 1


def test_primitive_n2_classes_have_divisibility_one_or_two():
    for a in range(-40, 41):
        for b in range(-40, 41):
            c = _g(a, b)
            if c.is_zero or not is_primitive(c):
                continue
            assert divisibility(c) in (1, 2)
            assert k3n_discriminant(2) % divisibility(c) == 0


class TestIsPrimitive(unittest.TestCase):

    def test_examples(self):
        self.assertTrue(is_primitive(_g(2, -1)))
        self.assertFalse(is_primitive(_g(2, 0)))
        self.assertFalse(is_primitive(_g(6, 4)))

    def test_zero_class(self):
        with self.assertRaises(ZeroClassError):
            is_primitive(_g(0, 0))


class TestDiscriminant(unittest.TestCase):

    def test_rank_one(self):
        self.assertEqual(discriminant(GramLattice(rank=1, gram=((2,),))), 2)

    def test_rank_two(self):
        self.assertEqual(discriminant(GramLattice(rank=2, gram=((0, 1), (1, -2)))), -1)

    def test_genus_two_picard_lattice(self):
        g = genus_two_lattice()
        self.assertEqual(g.gram, ((2, 2), (2, 0)))
        self.assertEqual(discriminant(g), -4)

    def test_rank_three_unsupported(self):
        g = GramLattice(rank=3, gram=((2, 0, 0), (0, 2, 0), (0, 0, 2)))
        with self.assertRaises(RankUnsupportedError):
            discriminant(g)

    def test_k3n_discriminant(self):
        for n in range(2, 10):
            self.assertEqual(k3n_discriminant(n), 2 * (n - 1))


class TestBasisChange(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(hl_to_hdelta(HLClass(a=1, b=1)), (2, -1))
        self.assertEqual(hl_to_hdelta(HLClass(a=1, b=0)), (1, 0))
        self.assertEqual(hl_to_hdelta(HLClass(a=0, b=1)), (1, -1))

    def test_wall_class(self):
        self.assertEqual(hl_to_hdelta(WALL_CLASS), (2, -3))

    def test_as_general_class(self):
        c = hl_as_general(HLClass(a=1, b=1))
        self.assertEqual((c.a, c.b, c.d0, c.n), (2, -1, 1, 2))

    def test_model_is_kept(self):
        self.assertEqual(hdelta_to_hl(2, -1, model="xprime"), HLClass(a=1, b=1, model="xprime"))


@pytest.mark.slow
def test_round_trip_and_square_invariance():
    rng = random.Random(99)
    for _ in range(1_000_000):
        a, b = rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6)
        c = HLClass(a=a, b=b)
        assert hdelta_to_hl(*hl_to_hdelta(c)) == c
        assert hl_to_hdelta(hdelta_to_hl(a, b)) == (a, b)
    for a in range(-20, 21):
        for b in range(-20, 21):
            c = HLClass(a=a, b=b)
            assert hl_square(c) == 2 * a * a + 4 * a * b
            assert hl_square(c) == genus_two_lattice().square((a, b))


def test_hl_pairings_of_named_classes():
    h, l = HLClass(a=1, b=0), HLClass(a=0, b=1)
    assert hl_pair(h, WALL_CLASS) == 4
    assert hl_pair(l, WALL_CLASS) == -2
    assert hl_pair(HLClass(a=1, b=2), WALL_CLASS) == 0
