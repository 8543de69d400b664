from __future__ import annotations

import random

import pytest

from g2crystal.cartan import INDEX_SET, simple_root, weight_sub
from g2crystal.cliff import CliffElement, ElementaryElement, highest_cliff

from conftest import EXAMPLE_KS


def a_seq_oracle(elem, i):
    """The closed-form a-values, written out term by term."""
    k12bar, k13bar, k13, k12, k11, k22 = elem.ks()
    if i == 1:
        return [
            0,
            k12bar,
            None,
            k13 + 2 * k12bar - 3 * k13bar,
            None,
            k11 + 2 * k12bar - 3 * k13bar + 2 * k13 - 3 * k12,
            None,
        ]
    return [
        0,
        None,
        k13bar - k12bar,
        None,
        k12 - k12bar + 2 * k13bar - k13,
        None,
        k22 - k12bar + 2 * k13bar - k13 + 2 * k12 - k11,
    ]


def _random_member(rng):
    k12bar = rng.randint(0, 3)
    k13bar = k12bar + rng.randint(0, 3)
    k13 = 2 * k13bar + rng.randint(0, 5)
    k12 = (k13 + 1) // 2 + rng.randint(0, 3)
    k11 = k12 + rng.randint(0, 3)
    return CliffElement(k12bar, k13bar, k13, k12, k11, rng.randint(0, 4))


def test_elementary_structure_maps():
    b = ElementaryElement(1, 0)
    assert b.wt() == (0, 0) and b.eps(1) == 0 and b.phi(1) == 0
    low = ElementaryElement(1, -7)
    assert low.wt() == (-14, 7)  # -7 * alpha_1 in Lambda-coordinates
    assert low.eps(1) == 7 and low.phi(1) == -7
    assert low.eps(2) is None and low.phi(2) is None
    assert low.f(1) == ElementaryElement(1, -8)
    assert low.e(1) == ElementaryElement(1, -6)
    assert low.f(2) is None and low.e(2) is None


def test_a_seq_at_the_origin():
    top = highest_cliff()
    assert top.a_seq(1) == [0, 0, None, 0, None, 0, None]
    assert top.a_seq(2) == [0, None, 0, None, 0, None, 0]


def test_a_seq_matches_closed_forms():
    example = CliffElement(*EXAMPLE_KS)
    assert example.a_seq(1) == [0, 1, None, 6, None, 6, None]
    assert example.a_seq(2) == a_seq_oracle(example, 2)
    rng = random.Random(31)
    for _ in range(300):
        elem = _random_member(rng)
        for i in INDEX_SET:
            assert elem.a_seq(i) == a_seq_oracle(elem, i)


def test_lowering_from_highest():
    top = highest_cliff()
    assert top.f(1).ks() == (0, 0, 0, 0, 1, 0)  # rightmost maximum, slot k11
    assert top.f(2).ks() == (0, 0, 0, 0, 0, 1)  # rightmost maximum, slot k22
    assert top.e(1) is None and top.e(2) is None


def test_membership_chain():
    assert highest_cliff().is_member()
    assert CliffElement(*EXAMPLE_KS).is_member()
    assert not CliffElement(2, 1, 0, 0, 0, 0).is_member()
    assert not CliffElement(0, 1, 1, 2, 3, 0).is_member()  # 2*k13bar > k13
    with pytest.raises(ValueError):
        CliffElement(-1, 0, 0, 0, 0, 0)


def test_a_seq_closed_forms_on_enumerated_members():
    frontier = [highest_cliff()]
    seen = {frontier[0]}
    for _ in range(10):
        nxt = []
        for elem in frontier:
            for i in INDEX_SET:
                assert elem.a_seq(i) == a_seq_oracle(elem, i)
                down = elem.f(i)
                if down not in seen:
                    seen.add(down)
                    nxt.append(down)
        frontier = nxt
    assert len(seen) == 372


def test_lowering_cases_match_strengthened_chains():
    """When the rule acts at a given slot, the pre-action counts satisfy the
    correspondingly strengthened inequality chain (so the image is again a
    member)."""
    rng = random.Random(47)
    for _ in range(300):
        c = _random_member(rng)
        for i in INDEX_SET:
            before = c.ks()
            after = c.f(i).ks()
            slot = next(j for j in range(6) if after[j] != before[j])
            k12bar, k13bar, k13, k12, k11, k22 = before
            if i == 1:
                assert slot in (0, 2, 4)
                if slot == 0:
                    assert k12bar + 1 <= k13bar and 2 * k13bar <= k13 <= 2 * k12 <= 2 * k11
                elif slot == 2:
                    assert k12bar <= k13bar and 2 * k13bar <= k13 + 1 and k13 + 1 <= 2 * k12
                else:
                    assert k12bar <= k13bar and 2 * k13bar <= k13 <= 2 * k12 and k12 <= k11 + 1
            else:
                assert slot in (1, 3, 5)
                if slot == 1:
                    assert k12bar <= k13bar + 1 and 2 * (k13bar + 1) <= k13
                elif slot == 3:
                    assert 2 * k13bar <= k13 <= 2 * (k12 + 1) and k12 + 1 <= k11
                else:
                    assert k22 + 1 >= 0


def test_selection_agrees_with_closed_form_argmax():
    rng = random.Random(37)
    for _ in range(300):
        elem = _random_member(rng)
        for i in INDEX_SET:
            oracle = a_seq_oracle(elem, i)
            finite = [a for a in oracle if a is not None]
            top = max(finite)
            f_slot = max(k for k, a in enumerate(oracle) if a == top)
            e_slot = min(k for k, a in enumerate(oracle) if a == top)
            before = elem.ks()
            after = elem.f(i).ks()
            changed = [j for j in range(6) if after[j] != before[j]]
            assert changed == [f_slot - 1]  # slot k acts on factor k-1
            up = elem.e(i)
            if e_slot == 0:
                assert up is None
            else:
                assert up is not None
                changed = [j for j in range(6) if up.ks()[j] != before[j]]
                assert changed == [e_slot - 1]


def test_closure_and_involution_to_depth_five():
    frontier = [highest_cliff()]
    seen = {frontier[0]}
    for _ in range(5):
        nxt = []
        for elem in frontier:
            for i in INDEX_SET:
                down = elem.f(i)
                assert down.is_member()
                assert down.e(i) == elem
                assert weight_sub(elem.wt(), down.wt()) == simple_root(i)
                up = elem.e(i)
                if up is not None:
                    assert up.is_member()
                    assert up.f(i) == elem
                if down not in seen:
                    seen.add(down)
                    nxt.append(down)
        frontier = nxt
    assert len(seen) == 45


def test_weight_closed_form():
    rng = random.Random(41)
    for _ in range(200):
        elem = _random_member(rng)
        a = elem.k12bar + elem.k13 + elem.k11
        b = elem.k13bar + elem.k12 + elem.k22
        expected = weight_sub(
            (0, 0),
            (
                a * simple_root(1)[0] + b * simple_root(2)[0],
                a * simple_root(1)[1] + b * simple_root(2)[1],
            ),
        )
        assert elem.wt() == expected


def test_eps_is_max_of_a_seq():
    example = CliffElement(*EXAMPLE_KS)
    assert example.eps(1) == 6 and example.eps(2) == 0
    assert example.phi(1) == example.eps(1) + example.wt()[0]
    assert example.phi(2) == example.eps(2) + example.wt()[1]


def test_text_and_json():
    example = CliffElement(*EXAMPLE_KS)
    assert example.text() == (
        "u∞ ⊗ b1(-1) ⊗ b2(-1) ⊗ b1(-7) "
        "⊗ b2(-4) ⊗ b1(-5) ⊗ b2(-2)"
    )
    assert CliffElement.from_json(example.to_json()) == example
