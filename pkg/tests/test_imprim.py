import itertools
import random

import pytest

from tools.field import FieldContext, adjoin_artin_schreier, parse_element
from tools.imprim import (
    AlgebraDescriptor, PureInsepExtension, adjunction_answers, degree, imp, imp_algebra,
    is_p_independent, min_generating_subset,
)
from conftest import random_poly


def ext(ctx, *pairs):
    return PureInsepExtension.of(ctx, [(parse_element(ctx, a), n) for a, n in pairs])


def test_p_independence_examples(f2, f2r2):
    assert is_p_independent(f2r2.lams())
    assert not is_p_independent([f2.lam(1), parse_element(f2, "l1^3")])
    assert is_p_independent([])


def test_p_basis_plus_one_is_dependent(f3r2):
    extra = parse_element(f3r2, "l1*l2 + 1")
    assert is_p_independent(f3r2.lams())
    assert not is_p_independent(f3r2.lams() + [extra])


def test_imp_examples(f2r2):
    assert imp(ext(f2r2, ("l1", 1), ("l2", 1))) == 2
    assert imp(PureInsepExtension(f2r2)) == 0
    assert degree(ext(f2r2, ("l1", 1), ("l2", 1))) == 4


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("r", [1, 2])
@pytest.mark.parametrize("n", [1, 2])
def test_imp_of_perfect_closure_levels(p, r, n):
    ctx = FieldContext(p, 1, r)
    L = PureInsepExtension.of(ctx, [(lam, n) for lam in ctx.lams()])
    assert imp(L) == r
    assert degree(L) == p ** (n * r)


def test_imp_algebra_examples(f2, f2r2):
    L = ext(f2, ("l1", 1))
    assert imp_algebra(AlgebraDescriptor([L, L])) == 1
    K = PureInsepExtension(f2)
    assert imp_algebra(AlgebraDescriptor([K, K])) == 0
    A = AlgebraDescriptor([ext(f2r2, ("l1", 1)), ext(f2r2, ("l2", 1))])
    assert imp_algebra(A) == 2


def test_min_generating_subset_examples(f2, f2r2):
    assert min_generating_subset(ext(f2, ("l1", 1))) == [0]
    assert len(min_generating_subset(ext(f2, ("l1", 1), ("l1", 1)))) == 1

    L = ext(f2r2, ("l1", 1), ("l2", 1), ("l1*l2", 1))
    chosen = min_generating_subset(L)
    assert len(chosen) == 2
    subset = PureInsepExtension(f2r2, tuple(L.generators[i] for i in chosen))
    assert degree(subset) == 4
    # every 2-subset that generates has the same degree as L
    generating = [pair for pair in itertools.combinations(range(3), 2)
                  if degree(PureInsepExtension(f2r2, tuple(L.generators[i] for i in pair))) == 4]
    assert tuple(chosen) in generating


def test_mixed_heights(f2r2):
    L = ext(f2r2, ("l1", 2), ("l2", 1), ("l1^2", 1))
    # l1^(2/2) lies in K, l1^(1/4) generates a degree 4 tower over K
    assert degree(L) == 8
    assert imp(L) == 2
    assert min_generating_subset(L) == [0, 1]


def test_adjunction_answers_count_no_answers(f2):
    # one adjunction, root absent: the degree grows by p exactly once
    L = ext(f2, ("l1", 1))
    answers = adjunction_answers(L)
    assert answers == [False]
    assert answers.count(True) == 0
    assert imp(L) == answers.count(False) == 1


@pytest.mark.parametrize("seed", range(4))
def test_adjunction_answers_match_imp(seed, f2r2):
    rng = random.Random(seed)
    gens = [(random_poly(f2r2, rng, 2), rng.randint(1, 2)) for _ in range(3)]
    gens = [(a, n) for a, n in gens if not a.is_zero()]
    L = PureInsepExtension.of(f2r2, gens)
    assert imp(L) == adjunction_answers(L).count(False)


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(100))
def test_monotone_and_bounded(seed):
    rng = random.Random(seed)
    p, r = rng.choice([(2, 1), (2, 2), (3, 1), (3, 2)])
    ctx = FieldContext(p, 1, r)
    gens = []
    for _ in range(4):
        a = random_poly(ctx, rng, 2)
        if not a.is_zero():
            gens.append((a, rng.randint(1, 2)))
    previous = 0
    for k in range(len(gens) + 1):
        value = imp(PureInsepExtension.of(ctx, gens[:k]))
        assert previous <= value <= r
        previous = value
    L = PureInsepExtension.of(ctx, gens)
    assert len(min_generating_subset(L)) == imp(L)


def test_imp_zero_iff_trivial(f3):
    assert imp(ext(f3, ("l1^3", 1))) == 0
    assert degree(ext(f3, ("l1^3", 1))) == 1
    assert imp(ext(f3, ("l1^3 + l1", 1))) == 1


def test_imp_invariant_under_separable_constants(f2r2):
    L = ext(f2r2, ("l1", 1), ("l2", 1))
    ctx, _ = adjoin_artin_schreier(f2r2, f2r2.one())
    lifted = PureInsepExtension.of(ctx, [(ctx.lift(a), n) for a, n in L.generators])
    assert imp(lifted) == imp(L) == 2
