import itertools
import random

import pytest
from hypothesis import given, strategies as st

from operadix.algebra import evaluate_tree, sample_algebra
from operadix.cochain import (ContextMonomial, Cup, DecomposableCochain, Placeholder, apply_map,
                              common_value, cup, defect_multiplier, dual_ta,
                              effective_components, evaluate_cochain, identity_map, nested,
                              nested_symbolic_eval, pa_defect_numeric, random_map, random_vector,
                              theorem_check_symbolic)
from operadix.components import component_basis
from operadix.fields import GF, QQ
from operadix.quadratic import pa_sign
from operadix.trees import corolla, enumerate_trees, from_composition_word, two_node


def ternary(field=QQ):
    return sample_algebra("rect_matrices", field, p=2, q=2)


def quaternary(field=QQ):
    return sample_algebra("diagonal", field, n=4, dim=3)


def maps(A, rng, k):
    return [random_map(A, rng) for _ in range(k)]


def vecs(A, rng, k):
    return [random_vector(A, rng) for _ in range(k)]


def mu(A, *xs):
    return A.mult(list(xs))


def test_ternary_cup_on_generator():
    A, rng = ternary(), random.Random(1)
    f, g, h = (DecomposableCochain.of(A, [M]) for M in maps(A, rng, 3))
    c = cup([f, g, h])
    assert c.degree == 1
    a = vecs(A, rng, 3)
    F, G, H = (x.components[0] for x in (f, g, h))
    expected = mu(A, apply_map(F, a[0]), apply_map(G, a[1]), apply_map(H, a[2]))
    assert evaluate_cochain(c, corolla(3), a) == expected


def test_cup_of_identities_is_the_product():
    A, rng = ternary(), random.Random(2)
    ident = DecomposableCochain.of(A, [identity_map(A)])
    a = vecs(A, rng, 3)
    assert evaluate_cochain(cup([ident] * 3), corolla(3), a) == mu(A, *a)


def test_quaternary_cup_on_weight_two():
    A, rng = quaternary(), random.Random(3)
    f, g, h, k = (DecomposableCochain.of(A, [M]) for M in maps(A, rng, 4))
    c = cup([f, g, h, k])
    assert c.degree == 2 and c.deferred == 1
    a = vecs(A, rng, 7)
    F, G, H, K = (x.components[0] for x in (f, g, h, k))
    ap = apply_map
    m1 = mu(A, mu(A, *(ap(F, x) for x in a[0:4])), ap(G, a[4]), ap(H, a[5]), ap(K, a[6]))
    m2 = mu(A, ap(F, a[0]), mu(A, *(ap(G, x) for x in a[1:5])), ap(H, a[5]), ap(K, a[6]))
    m3 = mu(A, ap(F, a[0]), ap(G, a[1]), mu(A, *(ap(H, x) for x in a[2:6])), ap(K, a[6]))
    for s, expected in zip((1, 2, 3), (m1, m2, m3)):
        assert evaluate_cochain(c, two_node(4, s), a) == expected


def test_degree_one_factor_distributes_over_leaves():
    A, rng = ternary(), random.Random(4)
    f1, f2, f3, G, H = maps(A, rng, 5)
    f = DecomposableCochain.of(A, [f1, f2, f3])
    g, h = DecomposableCochain.of(A, [G]), DecomposableCochain.of(A, [H])
    c = cup([f, g, h])
    assert c.degree == 2
    a = vecs(A, rng, 5)
    ap = apply_map
    m1 = mu(A, mu(A, ap(f1, a[0]), ap(f2, a[1]), ap(f3, a[2])), ap(G, a[3]), ap(H, a[4]))
    m2 = mu(A, ap(f1, a[0]), mu(A, ap(f2, a[1]), ap(f3, a[2]), ap(G, a[3])), ap(H, a[4]))
    assert evaluate_cochain(c, two_node(3, 1), a) == m1
    assert evaluate_cochain(c, two_node(3, 2), a) == m2


def test_degree_two_ternary_cochain_on_m2():
    A, rng = ternary(), random.Random(5)
    comps = maps(A, rng, 5)
    c = DecomposableCochain.of(A, comps)
    a = vecs(A, rng, 5)
    f, g, h, k, l = (apply_map(M, x) for M, x in zip(comps, a))
    assert evaluate_cochain(c, two_node(3, 2), a) == mu(A, f, mu(A, g, h, k), l)


BETA = ContextMonomial(4, 1, (1, 9))


def test_quaternary_worked_monomial():
    assert str(BETA) == "((m1 o1 mu*) o9 mu*)"
    assert BETA.tree.leaves == 13 and BETA.weight == 4
    assert BETA.tree in component_basis(dual_ta(4), 4).standard
    assert ContextMonomial.from_tree(BETA.tree) == BETA


def test_quaternary_nested_values_replicate_first_and_ninth():
    A, rng = quaternary(), random.Random(6)
    f, g, h, k, l, u, v = maps(A, rng, 7)
    cochains = [DecomposableCochain.of(A, [M]) for M in (f, g, h, k, l, u, v)]
    a = vecs(A, rng, 13)
    spread = [f] * 4 + [g, h, k, l] + [u] * 4 + [v]
    for p in range(1, 5):
        expr = nested(cochains, p)
        gamma = nested_symbolic_eval(expr, BETA)
        assert gamma == ContextMonomial(4, p, (1, 9))
        assert effective_components(expr.flatten(), gamma) == tuple(spread)
        direct = evaluate_tree(A, gamma.tree, [apply_map(M, x) for M, x in zip(spread, a)])
        assert evaluate_cochain(expr.flatten(), gamma, a) == direct


def test_nested_symbolic_eval_examples():
    f, g, h, k, l, u, v = (Placeholder(s, 0) for s in "fghkluv")
    m1 = ContextMonomial(3, 1)
    assert nested_symbolic_eval(Cup(f, Cup(g, h, k), l), m1) == ContextMonomial(3, 2)
    assert nested_symbolic_eval(Cup(Cup(f, g, h), k, l), m1) == m1
    assert nested_symbolic_eval(Cup(Cup(f, g, h), k, l), ContextMonomial(3, 1, (2, 4))) \
        == ContextMonomial(3, 1, (2, 4))
    assert nested_symbolic_eval(Cup(f, g, h, Cup(k, l, u, v)), BETA) == ContextMonomial(4, 4, (1, 9))
    with pytest.raises(ValueError):
        nested_symbolic_eval(Cup(f, Cup(g, Cup(h, k, l), u), v), m1)
    with pytest.raises(ValueError):
        nested_symbolic_eval(Cup(f, g, h), m1)


@pytest.mark.parametrize("n", [3, 4])
def test_cup_degree_law(n):
    for degrees in itertools.product(range(4), repeat=n):
        if sum(degrees) > 3:
            continue
        e = Cup(*(Placeholder(f"c{i}", d) for i, d in enumerate(degrees)))
        assert e.degree == sum(degrees) + n - 2
    A, rng = (ternary() if n == 3 else quaternary()), random.Random(n)
    for degrees in [(0,) * n, (1,) + (0,) * (n - 1), (0,) * (n - 1) + (1,)]:
        fs = [DecomposableCochain.of(A, maps(A, rng, 1 + d * (n - 1))) for d in degrees]
        assert cup(fs).degree == sum(degrees) + n - 2


@given(st.integers(0, 2**32), st.integers(1, 3))
def test_reassociated_concatenation_evaluates_equally(seed, p):
    A, rng = ternary(), random.Random(seed)
    cochains = [DecomposableCochain.of(A, [M]) for M in maps(A, rng, 5)]
    flat = [nested(cochains, q).flatten() for q in (1, 2, 3)]
    assert flat[0].components == flat[1].components == flat[2].components
    t = rng.choice(enumerate_trees(3, 2))
    a = vecs(A, rng, 5)
    assert evaluate_cochain(flat[p - 1], t, a) == evaluate_cochain(flat[0], t, a)


@given(st.integers(0, 2**32), st.integers(0, 4), st.integers(-3, 3))
def test_cup_is_linear_in_each_component(seed, slot, s):
    A, rng = ternary(), random.Random(seed)
    comps = maps(A, rng, 5)
    other = random_map(A, rng)
    mixed = list(comps)
    mixed[slot] = tuple(tuple(s * x + y for x, y in zip(r1, r2))
                        for r1, r2 in zip(comps[slot], other))
    swapped = list(comps)
    swapped[slot] = other
    t, a = two_node(3, 1 + seed % 3), vecs(A, rng, 5)
    ev = lambda ms: evaluate_cochain(DecomposableCochain.of(A, ms), t, a)  # noqa: E731
    assert ev(mixed) == tuple(s * x + y for x, y in zip(ev(comps), ev(swapped)))


@given(st.integers(0, 2**32))
def test_collapse_across_trees(seed):
    A, rng = ternary(), random.Random(seed)
    c = DecomposableCochain.of(A, maps(A, rng, 7))
    a = vecs(A, rng, 7)
    assert len({evaluate_cochain(c, t, a) for t in enumerate_trees(3, 3)}) == 1


def _probe(A, n, rng, degrees):
    cochains = [DecomposableCochain.of(A, maps(A, rng, 1 + d * (n - 1))) for d in degrees]
    w = sum(degrees) + 2 * (n - 2)
    beta = ContextMonomial.from_tree(rng.choice(component_basis(dual_ta(n, A.field), w).standard))
    return cochains, beta, vecs(A, rng, beta.tree.leaves)


@pytest.mark.parametrize("field", [QQ, GF(2), GF(3)], ids=str)
def test_quaternary_defect_vanishes(field):
    A, rng = quaternary(field), random.Random(7)
    for degrees in [(0,) * 7, (0, 0, 0, 1, 0, 0, 0)]:
        for _ in range(10):
            cochains, beta, a = _probe(A, 4, rng, degrees)
            assert not any(pa_defect_numeric(4, cochains, beta, a))


def test_ternary_defect_mod_three_vanishes():
    A, rng = ternary(GF(3)), random.Random(8)
    for _ in range(20):
        assert not any(pa_defect_numeric(3, *_probe(A, 3, rng, (0,) * 5)))


@pytest.mark.parametrize("kind,params", [("odd_poly", {"truncation": 11}),
                                         ("rect_matrices", {"p": 2, "q": 2})])
def test_ternary_defect_over_rationals_is_three_times_common(kind, params):
    A, rng = sample_algebra(kind, QQ, **params), random.Random(9)
    nonzero = 0
    for _ in range(20):
        cochains, beta, a = _probe(A, 3, rng, (0, 1, 0, 0, 0))
        # every nesting takes the common value, and the signs are all +
        terms = [evaluate_cochain(nested(cochains, p).flatten(), beta.with_seed(p), a)
                 for p in (1, 2, 3)]
        assert terms[0] == terms[1] == terms[2] == common_value(cochains, beta, a)
        defect = pa_defect_numeric(3, cochains, beta, a)
        assert defect == tuple(3 * x for x in terms[0])
        nonzero += any(defect)
    assert nonzero  # the probes are not vacuous


def test_defect_multiplier():
    assert defect_multiplier(3) == 3
    assert defect_multiplier(4) == 0
    assert [pa_sign(4, p) for p in range(1, 5)] == [1, -1, 1, -1]


def test_symbolic_ternary_base_case():
    cert = theorem_check_symbolic(3, (0,) * 5, 5)
    assert cert.ok and cert.weight == 2
    assert [e["beta"] for e in cert.entries] == ["m1", "m2"]
    assert all(e["reduced_row"] == ["0", "0"] for e in cert.entries)


def test_symbolic_quaternary_includes_worked_monomial():
    cert = theorem_check_symbolic(4, (0,) * 7, 5)
    assert cert.ok and cert.weight == 4
    assert str(BETA) in [e["beta"] for e in cert.entries]


def test_symbolic_over_prime_field():
    assert theorem_check_symbolic(3, (0, 0, 1, 0, 0), 5, GF(3)).ok
    assert theorem_check_symbolic(4, (0,) * 7, 5, GF(2)).ok


def test_symbolic_rejects_bad_input():
    with pytest.raises(ValueError):
        theorem_check_symbolic(5, (0,) * 9, 9)
    with pytest.raises(ValueError):
        theorem_check_symbolic(3, (0,) * 4, 5)
    with pytest.raises(ValueError):
        theorem_check_symbolic(3, (1, 1, 1, 0, 0), 4)


def test_cochain_validation():
    A = ternary()
    with pytest.raises(ValueError):
        DecomposableCochain.of(A, [identity_map(A)] * 2)
    with pytest.raises(ValueError):
        DecomposableCochain(A, 1, (identity_map(A),) * 2)
    c = DecomposableCochain.of(A, [identity_map(A)] * 3)
    with pytest.raises(ValueError):
        evaluate_cochain(c, two_node(3, 1), vecs(A, random.Random(0), 5))
    with pytest.raises(ValueError):
        cup([c, c])
