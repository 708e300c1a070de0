"""Shared corpora for the test suite.

Everything here is seed-deterministic: the corpora are rebuilt identically on
every run, so tests that quantify over them ("zero failures over the corpus")
are reproducible without shipping pickled automata.

Three corpora are exposed as session fixtures:

  * corpus100 — 100 random automata with a forced mix of ambiguity classes
    (quota-sampled, plus a handful of automata with polynomial degree >= 2,
    which are too rare to hit by quota alone).
  * pairs200 — 200 pairs of small automata for product/counting checks.
  * prob50 — 50 probabilistic automata over finitely ambiguous skeletons,
    weighted per-state stochastic with a bias toward stopping at final
    states so that the brute-force entropy truncation error is negligible.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from functools import lru_cache

import pytest

from artifact.analysis import AmbiguityClass, classify
from artifact.entropy import brute_entropy, validate_probabilistic
from artifact.oracle import random_automaton
from artifact.weighted import WeightedAutomaton, validate_weighted

CORPUS_QUOTA = {
    AmbiguityClass.FINITE: 36,
    AmbiguityClass.POLYNOMIAL: 30,
    AmbiguityClass.EXPONENTIAL: 22,
}
DEEP_POLY_COUNT = 12  # members with dpa >= 2, drawn from a unary family

PAIR_SEED_BASE = 300_000
PROB_SKELETON_SEED_BASE = 400_000
PROB_WEIGHT_SEED_BASE = 500_000
DEEP_POLY_SEED_BASE = 700_000

# truncation length / residual cap used when accepting a probabilistic
# automaton into prob50; keeps brute-force entropy good to ~1e-8 nats
PROB_BRUTE_LEN = 12
PROB_RESIDUAL_CAP = 1e-9


@lru_cache(maxsize=None)
def build_corpus100():
    picked = []
    counts: Counter = Counter()
    s = 0
    while len(picked) < 100 - DEEP_POLY_COUNT:
        states = 3 + s % 6
        symbols = 1 + s % 2
        density = (1.2 + 0.3 * (s % 3)) / states
        eps = (0.0, 0.12, 0.22)[s % 3]
        a = random_automaton(states, symbols, density, eps, seed=s)
        s += 1
        if a.num_states == 0:
            continue
        kind = classify(a).kind
        if counts[kind] < CORPUS_QUOTA[kind]:
            counts[kind] += 1
            picked.append(a)
    s = 0
    deep = 0
    while deep < DEEP_POLY_COUNT:
        states = 5 + s % 4
        a = random_automaton(states, 1, 1.25 / states, 0.0, seed=DEEP_POLY_SEED_BASE + s)
        s += 1
        if a.num_states == 0:
            continue
        r = classify(a)
        if r.kind == AmbiguityClass.POLYNOMIAL and r.degree >= 2:
            picked.append(a)
            deep += 1
    return tuple(picked)


@lru_cache(maxsize=None)
def build_pairs200():
    pairs = []
    s = 0
    while len(pairs) < 200:
        n1 = 2 + s % 5
        n2 = 2 + (s + 3) % 5
        a1 = random_automaton(
            n1, 1 + s % 2, (0.9 + 0.25 * (s % 3)) / n1,
            (0.0, 0.1, 0.2)[s % 3], seed=PAIR_SEED_BASE + s,
        )
        a2 = random_automaton(
            n2, 1 + (s + 1) % 2, (0.9 + 0.25 * ((s + 1) % 3)) / n2,
            (0.0, 0.1, 0.2)[(s + 1) % 3], seed=PAIR_SEED_BASE + 1 + s,
        )
        s += 1
        if a1.num_states == 0 or a2.num_states == 0:
            continue
        pairs.append((a1, a2))
    return tuple(pairs)


def _stochastic_over(skel, seed: int) -> WeightedAutomaton:
    """Per-state stochastic weighting of a skeleton, biased to stop early."""
    rng = random.Random(seed)
    lam_raw = {q: rng.uniform(0.5, 1.0) for q in skel.initial}
    z = sum(lam_raw.values())
    lam = {q: w / z for q, w in lam_raw.items()}
    quads = []
    rho = {}
    for q in range(skel.num_states):
        outs = [t for t in skel.transitions if t.src == q]
        raw = [rng.uniform(0.05, 0.2) for _ in outs]
        stop = rng.uniform(5.0, 9.0) if q in skel.final else 0.0
        total = sum(raw) + stop
        for t, w in zip(outs, raw):
            quads.append((t.src, t.label, t.dst, w / total))
        if stop:
            rho[q] = stop / total
    return validate_weighted(skel.alphabet, skel.num_states, lam, rho, quads)


@lru_cache(maxsize=None)
def build_prob50():
    """(skeleton, weighted automaton, brute entropy, residual) quadruples."""
    corpus = []
    s = 0
    while len(corpus) < 50:
        states = 3 + s % 5
        skel = random_automaton(
            states, 1 + s % 2, (1.0 + 0.2 * (s % 3)) / states,
            (0.0, 0.1)[s % 2], seed=PROB_SKELETON_SEED_BASE + s,
        )
        s += 1
        if skel.num_states == 0 or classify(skel).kind != AmbiguityClass.FINITE:
            continue
        try:
            wa = validate_probabilistic(_stochastic_over(skel, PROB_WEIGHT_SEED_BASE + s))
        except Exception:
            continue
        h, residual = brute_entropy(wa, PROB_BRUTE_LEN)
        if residual >= PROB_RESIDUAL_CAP:
            continue
        corpus.append((skel, wa, h, residual))
    return tuple(corpus)


@pytest.fixture(scope="session")
def corpus100():
    return build_corpus100()


@pytest.fixture(scope="session")
def pairs200():
    return build_pairs200()


@pytest.fixture(scope="session")
def prob50():
    return build_prob50()


def semantic_count(a, x) -> int:
    """da(A, x) extended to strings over any alphabet: 0 off-alphabet."""
    from artifact.oracle import count_paths

    if not set(x) <= set(a.alphabet):
        return 0
    return count_paths(a, x)


def running_max(table) -> list[int]:
    """Running maximum of growth-table counts: entry n covers lengths <= n."""
    out = []
    m = 0
    for row in table.rows:
        m = max(m, row.count)
        out.append(m)
    return out


def assert_growth_consistent(kind: AmbiguityClass, degree, run: list[int]) -> bool:
    """The class-specific growth envelope used by the consistency checks."""
    if kind == AmbiguityClass.FINITE:
        return run[12] == run[8]
    if kind == AmbiguityClass.EXPONENTIAL:
        return run[10] >= 2 * run[5]
    return run[12] <= 13 ** degree * max(run[4], 1)


def entropy_gap_bound(k_observed: int) -> float:
    return math.log(k_observed)
