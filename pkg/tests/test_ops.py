"""Operator algebra: worked chains, identities, iteration, parsing."""

import random

import pytest

from lozenge import (
    H1,
    H2,
    H3,
    InputError,
    apply_operator,
    apply_word,
    expand_step,
    iterate_word_component,
    parse_triple,
    parse_word,
    verify_identities,
)


def rand_triples(seed, n, lo=-10**6, hi=10**6):
    rng = random.Random(seed)
    return [(rng.randint(lo, hi), rng.randint(lo, hi), rng.randint(lo, hi))
            for _ in range(n)]


def test_single_operator_examples():
    assert apply_operator(H1, (1, 2, 3)) == (5, 2, 3)
    assert apply_operator(H1, (0, 0, 0)) == (1, 0, 0)
    assert apply_operator(H3, (5, 2, 3)) == (5, 2, 5)
    assert apply_operator(H2, (5, 2, 5)) == (5, 9, 5)


def test_unknown_operator_rejected():
    with pytest.raises(InputError):
        apply_operator(4, (0, 0, 0))


def test_worked_chain_to_5_9_5():
    chain = [(1, 2, 3)]
    for op in (H1, H3, H2, H1, H1):
        chain.append(apply_operator(op, chain[-1]))
    assert chain == [
        (1, 2, 3), (5, 2, 3), (5, 2, 5), (5, 9, 5), (10, 9, 5), (5, 9, 5),
    ]
    assert apply_word((H1, H3, H2, H1, H1), (1, 2, 3)) == (5, 9, 5)


def test_empty_word_is_identity():
    assert apply_word((), (7, -4, 9)) == (7, -4, 9)


def test_coincidence_chains():
    word = (H1, H3, H2, H3)
    steps_a = [(1, 3, 6)]
    for op in word:
        steps_a.append(apply_operator(op, steps_a[-1]))
    assert steps_a == [(1, 3, 6), (9, 3, 6), (9, 3, 7), (9, 14, 7), (9, 14, 17)]
    assert apply_word(word, (6, 7, 9)) == (11, 15, 17)


def test_expand_step_keeps_multiset():
    assert expand_step((0, 0, 0)) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    # oracle: three individual operator applications
    t = (1, 2, 3)
    expected = tuple(apply_operator(k, t) for k in (H1, H2, H3))
    assert expand_step(t) == expected == ((5, 2, 3), (1, 3, 3), (1, 2, 1))


def test_expand_step_contains_fixed_point():
    # a + b odd and c = (a + b + 1) / 2 makes H3 a fixed point
    assert apply_operator(H3, (0, 1, 1)) == (0, 1, 1)
    assert (0, 1, 1) in expand_step((0, 1, 1))


def test_identities_on_random_sample():
    rep = verify_identities(rand_triples(7, 2000))
    assert rep.involution and rep.braid and rep.order_six
    assert rep.noncommuting_witness is not None
    assert rep.samples_checked == 2000
    assert rep.ok
    assert rep.failures == []


def test_six_fold_composition_oracle():
    # (H1 o H2) three times, spelled out as six single applications
    t = (4, 7, 5)
    cur = t
    for _ in range(3):
        cur = apply_operator(H1, apply_operator(H2, cur))
    assert cur == t


def test_commutation_happens_only_on_the_fixed_line():
    # H1 and H2 commute exactly when y = x and z = x - 1
    both = (2, 2, 1)
    assert apply_operator(H1, apply_operator(H2, both)) == \
        apply_operator(H2, apply_operator(H1, both))
    origin = (0, 0, 0)
    assert apply_operator(H1, apply_operator(H2, origin)) != \
        apply_operator(H2, apply_operator(H1, origin))


def test_translation_equivariance():
    rng = random.Random(11)
    for _ in range(10_000):
        t = (rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6),
             rng.randint(-10**6, 10**6))
        h = rng.randint(-10**6, 10**6)
        word = tuple(rng.randint(1, 3) for _ in range(rng.randint(0, 6)))
        shifted = (t[0] + h, t[1] + h, t[2] + h)
        res = apply_word(word, t)
        assert apply_word(word, shifted) == (res[0] + h, res[1] + h, res[2] + h)


def test_replacement_sum_rule():
    # for t' = Hk(t): replaced_old + replaced_new = kept1 + kept2 + 1
    rng = random.Random(13)
    for _ in range(10_000):
        t = (rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6),
             rng.randint(-10**6, 10**6))
        k = rng.randint(1, 3)
        t2 = apply_operator(k, t)
        kept = [t[i] for i in range(3) if i != k - 1]
        assert t[k - 1] + t2[k - 1] == kept[0] + kept[1] + 1


def test_iterate_word_component_quadratic_sequence():
    word = (H2, H3, H1, H3)
    expected = [3 * k * k - k + 17 for k in range(11)]
    assert expected[:5] == [17, 19, 27, 41, 61]
    assert iterate_word_component((9, 14, 17), word, 3, 10) == expected
    assert iterate_word_component((11, 15, 17), word, 3, 10) == expected


def test_iterate_word_component_trivial_and_errors():
    assert iterate_word_component((3, 1, 4), (), 2, 3) == [1, 1, 1, 1]
    with pytest.raises(InputError):
        iterate_word_component((0, 0, 0), (H1,), 0, 2)
    with pytest.raises(InputError):
        iterate_word_component((0, 0, 0), (H1,), 1, -1)


def test_parse_triple():
    assert parse_triple("1,2,3") == (1, 2, 3)
    assert parse_triple(" -4, 0 , 17") == (-4, 0, 17)
    with pytest.raises(InputError):
        parse_triple("1,2")
    with pytest.raises(InputError):
        parse_triple("a,b,c")


def test_parse_word_conventions():
    assert parse_word("1321") == (1, 3, 2, 1)
    assert parse_word("H1H3H2H1") == (1, 3, 2, 1)
    assert parse_word("1,3,2,1") == (1, 3, 2, 1)
    # composition order reverses into execution order
    assert parse_word("1321", composition_order=True) == (1, 2, 3, 1)
    with pytest.raises(InputError):
        parse_word("124")


def test_word_conventions_agree_on_chains():
    # the (5,9,5) chain written as a composition is the reverse string
    execution = parse_word("13211")
    composition = parse_word("11231", composition_order=True)
    assert execution == composition
    assert apply_word(execution, (1, 2, 3)) == (5, 9, 5)
