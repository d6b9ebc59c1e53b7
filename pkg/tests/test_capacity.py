import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from echkit.capacity import (
    CapacitySequence,
    ball_capacity,
    ball_sequence,
    brute_force_union,
    ellipsoid_sequence,
    embed_ellipsoid_check,
    sequence_dominates,
    union_capacities,
)
from echkit.errors import ConsistencyError, DomainError, ResourceError, UsageError


def sorted_lattice(a, b, count):
    """Independent N(a, b): sort a generous box of m*a + n*b."""
    span = count + 2
    vals = sorted(m * a + n * b for m in range(span) for n in range(span))
    return vals[:count]


def test_ball_capacity_small():
    assert ball_capacity(1, 0) == 0
    assert ball_capacity(3.7, 0) == 0
    assert [ball_capacity(1, k) for k in range(1, 7)] == [1, 1, 2, 2, 2, 3]
    assert [ball_capacity(1, k) for k in range(7)] == sorted_lattice(1, 1, 7)


def test_ball_capacity_table_value():
    assert ball_capacity(0.353554, 3) == pytest.approx(0.707108, abs=1e-12)


def test_ball_index_unique():
    for k in range(500):
        d = ball_capacity(1, k)
        assert d * d + d <= 2 * k <= d * d + 3 * d
        assert sum(1 for e in range(60) if e * e + e <= 2 * k <= e * e + 3 * e) == 1


@pytest.mark.parametrize("a", [0, -1, float("nan"), float("inf")])
def test_ball_capacity_domain(a):
    with pytest.raises(DomainError):
        ball_capacity(a, 1)


def test_ellipsoid_examples():
    assert ellipsoid_sequence(1, 1, 6).values == (0, 1, 1, 2, 2, 2, 3)
    assert ellipsoid_sequence(3, 1, 5).values == (0, 1, 2, 3, 3, 4)
    assert ellipsoid_sequence(3, 1, 5).provenance == "ellipsoid"


@pytest.mark.parametrize("a,b", [(1, 1), (3, 1), (2, 5), (0.7, 1.3), (1, math.sqrt(2))])
def test_ellipsoid_matches_lattice_oracle(a, b):
    assert list(ellipsoid_sequence(a, b, 40)) == sorted_lattice(a, b, 41)


def test_ellipsoid_scaling():
    for k, (x, y) in enumerate(zip(ellipsoid_sequence(2, 6, 50), ellipsoid_sequence(1, 3, 50))):
        assert x == 2 * y


def test_ball_equals_round_ellipsoid():
    assert list(ball_sequence(1, 200)) == list(ellipsoid_sequence(1, 1, 200))
    for a in (0.37, 2.5):
        for x, y in zip(ball_sequence(a, 200), ellipsoid_sequence(a, a, 200)):
            assert x == pytest.approx(y, rel=1e-13)


def test_ellipsoid_domain():
    with pytest.raises(DomainError):
        ellipsoid_sequence(0, 1, 3)
    with pytest.raises(DomainError):
        ellipsoid_sequence(1, -2, 3)


def test_union_examples():
    assert list(union_capacities([1], 6)) == [0, 1, 1, 2, 2, 2, 3]
    assert union_capacities([1, 1], 2)[2] == 2
    assert union_capacities([2, 1], 1)[1] == 2
    assert union_capacities([1, 1, 1], 3)[3] == 3


def test_union_empty():
    with pytest.raises(DomainError):
        union_capacities([], 3)
    with pytest.raises(DomainError):
        union_capacities([1, 0], 3)


def test_brute_force_examples():
    assert list(brute_force_union([1], 3)) == [0, 1, 1, 2]
    assert brute_force_union([2, 1], 1)[1] == 2
    assert brute_force_union([1, 1, 1], 3)[3] == 3


def test_brute_force_guard():
    with pytest.raises(ResourceError):
        brute_force_union([1] * 7, 3)
    with pytest.raises(ResourceError):
        brute_force_union([1], 16)
    assert brute_force_union([1, 2], 16, max_k=16).kmax == 16


GRID = (0.3, 0.5, 1, 1.7, 2)


def grid_lists():
    for n in range(1, 5):
        yield from itertools.combinations_with_replacement(GRID, n)


def test_union_equals_brute_force_on_grid():
    for ws in grid_lists():
        dp = union_capacities(ws, 12)
        bf = brute_force_union(ws, 12)
        for x, y in zip(dp, bf):
            assert abs(x - y) <= 1e-12


def test_union_pure_python_path(force_python):
    for ws in [(0.3, 1.7), (2, 1, 0.5)]:
        assert list(union_capacities(ws, 12)) == list(brute_force_union(ws, 12))


@pytest.mark.parametrize("r", [0.5, 2, math.sqrt(2)])
def test_conformality(r):
    for ws in [(0.3, 1, 2), (1.7,), (0.5, 0.5, 1.7, 2)]:
        base = union_capacities(ws, 30)
        scaled = union_capacities([r * w for w in ws], 30)
        for x, y in zip(base, scaled):
            assert y == pytest.approx(r * x, rel=1e-12, abs=0)


def test_permutation_invariance():
    ws = [0.3, 1.7, 0.5, 2, 1]
    ref = union_capacities(ws, 25)
    rng = random.Random(3)
    for _ in range(20):
        rng.shuffle(ws)
        for x, y in zip(ref, union_capacities(ws, 25)):
            assert x == pytest.approx(y, abs=1e-12)


def test_superadditivity_over_splits():
    rng = random.Random(11)
    checked = 0
    for _ in range(40):
        ws = [rng.uniform(0.1, 3) for _ in range(rng.randint(2, 6))]
        mask = [rng.random() < 0.5 for _ in ws]
        left = [w for w, m in zip(ws, mask) if m]
        right = [w for w, m in zip(ws, mask) if not m]
        if not left or not right:
            continue
        whole = union_capacities(ws, 20)
        cl, cr = union_capacities(left, 20), union_capacities(right, 20)
        for j in range(21):
            for k in range(21 - j):
                assert whole[j + k] >= cl[j] + cr[k] - 1e-12
        checked += 1
    assert checked > 10


def test_keeps_only_k_largest_exactly():
    rng = random.Random(5)
    ws = [rng.uniform(0.05, 1) for _ in range(40)]
    for K in (0, 1, 3, 6):
        top = sorted(ws, reverse=True)[: max(K, 1)]
        a = union_capacities(ws, K)
        b = union_capacities(top, K)
        assert list(a) == pytest.approx(list(b), abs=1e-12)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.floats(min_value=0.01, max_value=50), min_size=1, max_size=6), st.integers(0, 25))
def test_sequence_invariants(ws, K):
    seq = union_capacities(ws, K)
    assert seq[0] == 0
    assert all(b >= a for a, b in zip(seq, seq.values[1:]))
    assert seq.kmax == K


def test_sequence_type_invariants():
    with pytest.raises(ConsistencyError):
        CapacitySequence((1, 2))
    with pytest.raises(ConsistencyError):
        CapacitySequence((0, 2, 1))
    with pytest.raises(UsageError):
        CapacitySequence((0,), "mystery")


def test_dominates_examples():
    b = union_capacities([1, 0.5], 15)
    zero = CapacitySequence((0,) * 16, "ball")
    assert sequence_dominates(zero, b).dominates
    assert sequence_dominates(b, b.scaled(1.0)).dominates
    assert sequence_dominates(b, b.scaled(1.3)).dominates
    assert sequence_dominates(ellipsoid_sequence(2, 1, 30), ellipsoid_sequence(3, 1, 30)).dominates
    v = sequence_dominates(b.scaled(1.3), b)
    assert not v.dominates and v.first_violation == 1


def test_dominates_length_mismatch():
    with pytest.raises(UsageError):
        sequence_dominates([0, 1], [0, 1, 2])


def test_dominates_tolerance():
    assert sequence_dominates([0, 1 + 5e-10], [0, 1]).dominates
    assert not sequence_dominates([0, 1 + 5e-9], [0, 1]).dominates


def test_embed_examples():
    assert embed_ellipsoid_check(1, 1, 1, 1, 20).dominates
    v = embed_ellipsoid_check(1, 1, 0.5, 0.5, 20)
    assert not v.dominates and v.first_violation == 1


def test_embed_e21_into_ball():
    # sorted {2m + n} against 1.5 * N(1, 1): 2 > 1.5 at k = 2
    src = sorted_lattice(2, 1, 11)
    tgt = [1.5 * x for x in sorted_lattice(1, 1, 11)]
    first = next(k for k, (x, y) in enumerate(zip(src, tgt)) if x > y)
    v = embed_ellipsoid_check(2, 1, 1.5, 1.5, 10)
    assert not v.dominates and v.first_violation == first == 2
    assert embed_ellipsoid_check(2, 1, 2, 2, 30).dominates


def test_embed_guards():
    with pytest.raises(DomainError):
        embed_ellipsoid_check(1, 0, 1, 1, 5)
    with pytest.raises(UsageError):
        embed_ellipsoid_check(1, 1, 1, 1, 0)
