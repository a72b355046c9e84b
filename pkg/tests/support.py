"""Shared generators and independent brute-force oracles for the suite.

The oracles here deliberately avoid the code paths they check: term
survival is a raw permutation scan, and the row-count condition has a
literal all-subsets form.  Random streams are seeded so that every test
module (and the acceptance suite) sees the same pairs.
"""

import itertools
import random

from immaculates import enumerate_compositions, is_partition, nocancel_conditions_hold

SUITE2_SEED = 0xA11CE
SUITE3_SEED = 0xB0B
STRUCT_SEED = 0xC0FFEE


def surviving_term_exists(matrix) -> bool:
    """Oracle: some permutation selects only nonnegative entries."""
    l = matrix.dim
    return any(
        all(matrix.entries[i][perm[i]] >= 0 for i in range(l))
        for perm in itertools.permutations(range(l))
    )


def condition1_all_subsets(counts) -> bool:
    """Literal form: every k-subset of rows has a row with >= k nonnegatives."""
    indices = range(len(counts))
    for k in range(1, len(counts) + 1):
        for subset in itertools.combinations(indices, k):
            if max(counts[i] for i in subset) < k:
                return False
    return True


def compositions_up_to_weight(max_weight, length):
    for n in range(length, max_weight + 1):
        yield from enumerate_compositions(n, length)


def partitions_up_to_weight(max_weight, length):
    for comp in compositions_up_to_weight(max_weight, length):
        if is_partition(comp):
            yield comp


def random_composition(rng, length, hi):
    return tuple(rng.randint(1, hi) for _ in range(length))


def random_partition(rng, length, hi):
    return tuple(sorted((rng.randint(1, hi) for _ in range(length)), reverse=True))


def suite2_exhaustive_pairs(max_weight=8, max_length=4):
    """Every equal-length pair with both weights bounded."""
    for length in range(1, max_length + 1):
        alphas = list(compositions_up_to_weight(max_weight, length))
        for alpha in alphas:
            for beta in alphas:
                yield alpha, beta


def suite2_random_pairs(count=2000, lengths=(5, 6), hi=12):
    rng = random.Random(SUITE2_SEED)
    for _ in range(count):
        length = rng.choice(lengths)
        yield random_composition(rng, length, hi), random_composition(rng, length, hi)


def suite3_exhaustive_pairs(max_weight=8, max_length=4):
    """Every (composition, partition) equal-length pair with bounded weights."""
    for length in range(1, max_length + 1):
        lams = list(partitions_up_to_weight(max_weight, length))
        for alpha in compositions_up_to_weight(max_weight, length):
            for lam in lams:
                yield alpha, lam


def suite3_random_nocancel_pairs(count=1000, lengths=(5, 6), hi=8):
    """Random pairs filtered to the no-cancellation class (both conditions)."""
    rng = random.Random(SUITE3_SEED)
    produced = 0
    attempts = 0
    while produced < count:
        attempts += 1
        if attempts > 200 * count:
            raise RuntimeError("sampler starved; widen the ranges")
        length = rng.choice(lengths)
        lam = random_partition(rng, length, hi)
        alpha = tuple(rng.randint(1, lam[0] + length + 2) for _ in range(length))
        if nocancel_conditions_hold(alpha, lam):
            produced += 1
            yield alpha, lam


def structural_random_pairs(count=5000, lengths=(2, 3, 4, 5, 6), hi=12):
    rng = random.Random(STRUCT_SEED)
    for _ in range(count):
        length = rng.choice(lengths)
        yield random_composition(rng, length, hi), random_composition(rng, length, hi)


def structural_random_partition_pairs(count=2000, lengths=(2, 3, 4, 5, 6), hi=10):
    rng = random.Random(STRUCT_SEED + 1)
    for _ in range(count):
        length = rng.choice(lengths)
        yield random_composition(rng, length, hi), random_partition(rng, length, hi)
