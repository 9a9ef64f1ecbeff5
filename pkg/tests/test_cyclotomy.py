from itertools import count
from math import gcd

import numpy as np
import pytest
from sympy import n_order

from wgcs.cyclotomy import (
    ORDER,
    ClosedFormMismatch,
    CyclotomyError,
    class_product,
    closed_form_cyclotomic_numbers,
    closed_form_table_72,
    compute_u,
    cyclotomic_number,
    cyclotomic_table,
    difference_count,
    difference_count_on_pq,
    equality_pattern_holds,
    find_common_primitive_root,
    minus_one_class,
    minus_one_class_expected,
    minus_one_congruence_class,
    solve_quadform_reps,
    valid_pairs,
    whiteman,
)

PAIRS = [(7, 13), (7, 19), (7, 31), (13, 19), (7, 37), (7, 61), (13, 67), (19, 43)]


@pytest.mark.parametrize(
    "n1,n2,msg",
    [(7, 11, "gcd"), (7, 7, "distinct"), (9, 13, "prime"), (2, 7, "odd"), (7, 15, "prime")],
)
def test_rejects_bad_parameters(n1, n2, msg):
    with pytest.raises(CyclotomyError, match=msg):
        whiteman(n1, n2)


def test_rejects_bad_g_override():
    with pytest.raises(CyclotomyError):
        whiteman(7, 13, g=2)


def _first_common_root(n1, n2):
    def primitive(g, p):
        return g % p and n_order(g, p) == p - 1

    return next(g for g in count(2) if primitive(g, n1) and primitive(g, n2))


@pytest.mark.parametrize("n1,n2,want", [(7, 13, 19), (7, 31, 3)])
def test_common_primitive_root(n1, n2, want):
    assert find_common_primitive_root(n1, n2) == want


@pytest.mark.parametrize("n1,n2", PAIRS)
def test_common_root_against_sympy(n1, n2):
    g = find_common_primitive_root(n1, n2)
    assert g == _first_common_root(n1, n2)
    assert n_order(g, n1) == n1 - 1 and n_order(g, n2) == n2 - 1


@pytest.mark.parametrize("n1,n2,g,want", [(7, 13, 19, 40), (7, 31, 3, 94)])
def test_crt_u(n1, n2, g, want):
    u = compute_u(n1, n2, g)
    assert u == want and u % n1 == g % n1 and u % n2 == 1


def _classes_by_definition(n1, n2, g, u):
    n = n1 * n2
    e = (n1 - 1) * (n2 - 1) // 6
    return [sorted({pow(g, s, n) * pow(u, i, n) % n for s in range(e)}) for i in range(ORDER)]


@pytest.mark.parametrize("n1,n2", PAIRS)
def test_classes_match_definition(n1, n2):
    c = whiteman(n1, n2)
    assert gcd(n1 - 1, n2 - 1) == 6 and c.e * 6 == (n1 - 1) * (n2 - 1)
    for i, members in enumerate(_classes_by_definition(n1, n2, c.g, c.u)):
        assert c.W(i).tolist() == members
    units = np.concatenate([c.W(i) for i in range(ORDER)])
    assert sorted(units.tolist()) == [t for t in range(c.n) if gcd(t, c.n) == 1]


def test_labels_and_sizes(c713):
    assert c713.classes.sizes() == {**{f"W{i}": 12 for i in range(6)}, "P": 12, "Q": 6, "ZERO": 1}
    assert c713.classes.label(0) == "ZERO"
    assert c713.classes.label(7) == "P" and c713.classes.label(13) == "Q"


@pytest.mark.parametrize("n1,n2", PAIRS[:4])
def test_coset_action(n1, n2):
    c = whiteman(n1, n2)
    rng = np.random.default_rng(0)
    for i in range(ORDER):
        for r in (int(c.W(i)[0]), int(rng.choice(c.W(i)))):
            for j in range(ORDER):
                assert np.array_equal(class_product(c, r, j), c.W(i + j))


def _cyclotomic_brute(c):
    table = np.zeros((6, 6), dtype=int)
    members = [set(c.W(i).tolist()) for i in range(6)]
    for i in range(6):
        for t in members[i]:
            for j in range(6):
                table[i, j] += (t + 1) % c.n in members[j]
    return table


@pytest.mark.parametrize("n1,n2", PAIRS[:5])
def test_cyclotomic_table_by_enumeration(n1, n2):
    c = whiteman(n1, n2)
    table = cyclotomic_table(c)
    assert np.array_equal(table, _cyclotomic_brute(c))
    assert cyclotomic_number(c, 2, 5) == table[2, 5]
    units = {t for t in range(c.n) if gcd(t, c.n) == 1}
    assert table.sum() == sum((t + 1) % c.n in units for t in units)


def test_difference_counts_on_p_and_q(c713):
    assert difference_count_on_pq(c713, 0, 1, 7) == 2 == difference_count(c713, 0, 1, 7)
    assert difference_count_on_pq(c713, 3, 3, 7) == 1 == difference_count(c713, 3, 3, 7)
    assert difference_count_on_pq(c713, 2, 2, 13) == 0 == difference_count(c713, 2, 2, 13)


@pytest.mark.parametrize("n1,n2", PAIRS[:4])
def test_difference_counts_closed_form_everywhere(n1, n2):
    c = whiteman(n1, n2)
    for t in np.concatenate([c.P, c.Q]):
        for i in range(6):
            for j in range(6):
                assert difference_count(c, i, j, int(t)) == difference_count_on_pq(c, i, j, int(t))


def test_difference_count_rejects_units(c713):
    with pytest.raises(ValueError):
        difference_count_on_pq(c713, 0, 0, 1)


def test_minus_one_examples(c713, c719):
    assert minus_one_class(c713) == 3
    assert minus_one_class(c719) == 0
    assert c713.n % 12 == 7


def test_minus_one_equivalences_all_pairs():
    pairs = valid_pairs(5000)
    assert len(pairs) >= 10
    for n1, n2 in pairs:
        c = whiteman(n1, n2)
        k = minus_one_class(c)
        assert k == minus_one_class_expected(c) == minus_one_congruence_class(n1, n2)
        assert (k == 3) == (c.n % 12 == 7)
        assert (k == 0) == (c.n % 12 == 1)


def test_quadratic_forms_for_91():
    r = solve_quadform_reps(7, 13)
    assert (r.repX, r.repY) == (4, 5) and 16 + 75 == 91
    assert (r.repA, r.repB) == (19, 1) and 361 + 3 == 364
    assert (r.repC, r.repD) == (16, 2) and 256 + 108 == 364


@pytest.mark.parametrize("n1,n2", PAIRS)
def test_quadratic_forms_are_representations(n1, n2):
    r = solve_quadform_reps(n1, n2)
    n = n1 * n2
    assert r.repX**2 + 3 * r.repY**2 == n
    assert r.repA**2 + 3 * r.repB**2 == 4 * n
    assert r.repC**2 + 27 * r.repD**2 == 4 * n
    for x, y in r.xy_all:
        assert x * x + 3 * y * y == n


@pytest.mark.parametrize("n1,n2", PAIRS)
def test_closed_forms_reproduce_brute_force(n1, n2):
    c = whiteman(n1, n2)
    wit = closed_form_cyclotomic_numbers(c)
    assert np.array_equal(wit.table, _cyclotomic_brute(c))
    assert equality_pattern_holds(wit.table, c.eta % 2 == 1)


def test_closed_forms_cover_both_parities():
    etas = {whiteman(a, b).eta % 2 for a, b in PAIRS}
    assert etas == {0, 1}


def test_odd_eta_pattern_example(c719):
    t = cyclotomic_table(c719)
    assert c719.eta % 2 == 1
    assert t[0, 1] == t[1, 0] == t[5, 5]


def test_closed_form_entries_are_integers():
    for a, b in PAIRS:
        c = whiteman(a, b)
        w = closed_form_cyclotomic_numbers(c)
        t72 = closed_form_table_72(c.eta % 2 == 1, solve_quadform_reps(a, b).bigM, *w.signs)
        assert np.all(t72 % 72 == 0) and np.all(t72 >= 0)


def test_mismatch_is_reported(c713):
    wrong = solve_quadform_reps(7, 19)
    with pytest.raises(ClosedFormMismatch):
        closed_form_cyclotomic_numbers(c713, wrong)
