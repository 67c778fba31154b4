import random
from fractions import Fraction as F

import pytest

from isotypic import (
    CycEmbedding,
    CycValue,
    NumField,
    RATIONAL_FIELD,
    ValidationError,
    is_irreducible,
)
from isotypic.fixtures import order80_field, order80_k_and_l, sqrt_minus5_cyclotomic


def test_irreducibility_decision():
    assert is_irreducible([F(1), F(1)])                       # t + 1
    assert is_irreducible([F(1), F(1), F(1)])                 # t^2 + t + 1
    assert is_irreducible([F(144), F(0), F(-16), F(0), F(1)])
    assert is_irreducible([F(-2), F(0), F(1)])                # t^2 - 2
    assert not is_irreducible([F(-1), F(0), F(1)])            # (t-1)(t+1)
    assert not is_irreducible([F(6), F(5), F(1)])             # (t+2)(t+3)
    assert not is_irreducible([F(4), F(0), F(-5), F(0), F(1)])
    assert not is_irreducible([F(1), F(2), F(1)])             # (t+1)^2
    assert not is_irreducible([F(2)])                         # constant


def test_reducible_minpoly_rejected():
    with pytest.raises(ValidationError, match="not a field"):
        NumField([F(-1), F(0), F(1)], [[0, 1], [0, -1]])


def test_non_monic_rejected():
    with pytest.raises(ValidationError, match="monic"):
        NumField([F(1), F(0), F(2)], [[0, 1], [0, -1]])


def test_bad_automorphism_rejected():
    # t -> t + 1 is not a root of t^2 - 2
    with pytest.raises(ValidationError, match="not Galois as declared"):
        NumField([F(-2), F(0), F(1)], [[0, 1], [1, 1]])


def test_wrong_automorphism_count_rejected():
    with pytest.raises(ValidationError, match="not Galois as declared"):
        NumField([F(-2), F(0), F(1)], [[0, 1]])


def test_quadratic_inverse():
    L = NumField([-2, 0, 1], [[0, 1], [0, -1]])
    t = L.gen()
    assert 1 / t == t / 2
    assert t * t == 2


def test_cyclotomic_cubic_field():
    L = NumField([1, 1, 1], [[0, 1], [-1, -1]])
    g = L.gen()
    assert g * g + g + 1 == 0
    # the nontrivial automorphism is inversion
    assert L.apply_auto(1, g) == g ** 2


def test_field_axioms_randomized():
    L = order80_field()
    rng = random.Random(23)

    def rand():
        return L.value([F(rng.randint(-4, 4), rng.randint(1, 5)) for _ in range(4)])

    for _ in range(15):
        a, b, c = rand(), rand(), rand()
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        if not a.is_zero():
            assert a * a.inverse() == 1


def test_worked_example_field_structure():
    L = order80_field()
    k, l = order80_k_and_l(L)
    assert k * k == -5
    assert l * l == -2
    # Gal(L/K) = <tau>, tau(l) = -l fixing k; the other coset flips k
    assert L.apply_auto(1, k) == k
    assert L.apply_auto(1, l) == -l
    assert L.apply_auto(2, k) == -k
    assert len(L.automorphisms) == 4
    assert L.subfield_fixers == (0, 1)
    assert L.coset_reps_mod_fixers() == (0, 2)


def test_automorphism_group_closure():
    L = order80_field()
    n = len(L.automorphisms)
    seen = {L.compose(i, j) for i in range(n) for j in range(n)}
    assert seen == set(range(n))
    # composition order convention: apply i then j
    k, l = order80_k_and_l(L)
    for i in range(n):
        for j in range(n):
            for v in (k, l, L.gen()):
                assert L.apply_auto(j, L.apply_auto(i, v)) == L.apply_auto(L.compose(i, j), v)


def test_degree_one_field():
    assert RATIONAL_FIELD.degree == 1
    one = RATIONAL_FIELD.one()
    assert one + one == 2
    assert RATIONAL_FIELD.apply_auto(0, one * 5) == 5


def test_embedding_of_character_values():
    L = order80_field()
    k, _ = order80_k_and_l(L)
    kc = sqrt_minus5_cyclotomic(40)
    emb = CycEmbedding(L, kc, k)
    assert emb.embed(kc) == k
    assert emb.embed(kc * 3 - 7) == k * 3 - 7
    assert emb.embed(CycValue.from_rational(F(5, 3))) == L.from_rational(F(5, 3))
    # a value outside Q(k) is rejected
    with pytest.raises(ValidationError):
        emb.embed(CycValue.root_of_unity(40))


def test_embedding_validates_conjugate():
    L = order80_field()
    k, l = order80_k_and_l(L)
    kc = sqrt_minus5_cyclotomic(40)
    with pytest.raises(ValidationError, match="not a conjugate"):
        CycEmbedding(L, kc, l)  # sqrt(-2) is not a square root of -5
