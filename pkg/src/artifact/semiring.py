"""Pair semiring and a generalized shortest-distance over weighted automata.

The pair semiring carries (mass, accumulator) values: ⊕ adds componentwise,
⊗ multiplies masses and cross-multiplies accumulators (a product rule).  Two
weight mappings feed it:

  * entropy: w ↦ (w, −w·ln w), so a path accumulates −W·ln W of its own
    weight W, and summing over paths yields the path entropy;
  * expectation: w ↦ (w, w) on symbol transitions and (w, 0) on ε ones, so a
    path accumulates W·(number of symbols), summing to the expected length.

shortest_distance then ⊕-sums λ ⊗ w[π] ⊗ ρ over all successful paths: one
exact pass in topological order when the transition graph is acyclic,
otherwise synchronous relaxation sweeps until the largest componentwise
change drops to tol.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

from .core import EPSILON
from .errors import EpsilonCycleInput, NonConvergent, NonPositiveWeight
from .graphs import strongly_connected_components
from .weighted import WeightedAutomaton


class PairWeight(NamedTuple):
    first: float
    second: float


def _pair_plus(a: PairWeight, b: PairWeight) -> PairWeight:
    return PairWeight(a.first + b.first, a.second + b.second)


def _pair_times(a: PairWeight, b: PairWeight) -> PairWeight:
    return PairWeight(a.first * b.first, a.first * b.second + b.first * a.second)


@dataclass(frozen=True)
class SemiringSpec:
    zero: PairWeight
    one: PairWeight
    plus: Callable[[PairWeight, PairWeight], PairWeight]
    times: Callable[[PairWeight, PairWeight], PairWeight]
    tol: float = 1e-12

    def delta(self, a: PairWeight, b: PairWeight) -> float:
        """Largest componentwise distance; the convergence metric."""
        return max(abs(a.first - b.first), abs(a.second - b.second))


def entropy_semiring() -> SemiringSpec:
    return SemiringSpec(
        zero=PairWeight(0.0, 0.0),
        one=PairWeight(1.0, 0.0),
        plus=_pair_plus,
        times=_pair_times,
    )


def _entropy_value(x: float) -> PairWeight:
    if x == 0.0:
        return PairWeight(0.0, 0.0)
    # "+ 0.0" normalizes the -0.0 produced at x == 1
    return PairWeight(x, -(x * math.log(x)) + 0.0)


def map_entropy(wa: WeightedAutomaton) -> WeightedAutomaton:
    """Send every weight w to (w, −w·ln w); zero end weights go to (0, 0)."""
    weights = []
    for tr, w in zip(wa.skeleton.transitions, wa.weights):
        if w <= 0.0:
            raise NonPositiveWeight(f"transition {tr} has weight {w}")
        weights.append(_entropy_value(w))
    lam = []
    rho = []
    for pairs, out in ((wa.lam, lam), (wa.rho, rho)):
        for q, v in pairs:
            if v < 0.0:
                raise NonPositiveWeight(f"end weight of state {q} is {v}")
            out.append((q, _entropy_value(v)))
    return WeightedAutomaton(
        skeleton=wa.skeleton,
        weights=tuple(weights),
        lam=tuple(lam),
        rho=tuple(rho),
    )


def map_expectation(wa: WeightedAutomaton) -> WeightedAutomaton:
    """Send symbol weights to (w, w), ε weights to (w, 0); ends to (v, 0)."""
    weights = []
    for tr, w in zip(wa.skeleton.transitions, wa.weights):
        if w <= 0.0:
            raise NonPositiveWeight(f"transition {tr} has weight {w}")
        weights.append(PairWeight(w, 0.0 if tr.label == EPSILON else w))
    lam = []
    rho = []
    for pairs, out in ((wa.lam, lam), (wa.rho, rho)):
        for q, v in pairs:
            if v < 0.0:
                raise NonPositiveWeight(f"end weight of state {q} is {v}")
            out.append((q, PairWeight(v, 0.0)))
    return WeightedAutomaton(
        skeleton=wa.skeleton,
        weights=tuple(weights),
        lam=tuple(lam),
        rho=tuple(rho),
    )


def shortest_distance(
    wa: WeightedAutomaton,
    spec: SemiringSpec,
    tol: float = 1e-10,
    max_iter: int = 1_000_000,
    *,
    force_iterative: bool = False,
) -> PairWeight:
    """⊕ over all successful paths π of λ[p[π]] ⊗ w[π] ⊗ ρ[n[π]].

    Acyclic transition graphs are evaluated exactly in topological order
    (force_iterative overrides, for cross-checking).  Cyclic ones are relaxed
    with synchronous sweeps; convergence is geometric whenever cycle mass is
    below one, and NonConvergent reports the residual change otherwise.
    """
    skel = wa.skeleton
    n = skel.num_states
    if n == 0:
        return spec.zero

    eps_succ: list[list[int]] = [[] for _ in range(n)]
    for tr in skel.transitions:
        if tr.label == EPSILON:
            eps_succ[tr.src].append(tr.dst)
    ecomp, _ = strongly_connected_components(n, eps_succ)
    for tr, w in zip(skel.transitions, wa.weights):
        if tr.label == EPSILON and ecomp[tr.src] == ecomp[tr.dst] and w != spec.one:
            raise EpsilonCycleInput("ε-cycle with non-identity weight")

    lam = [spec.zero] * n
    for q, v in wa.lam:
        lam[q] = v
    in_arcs: list[list[tuple[int, PairWeight]]] = [[] for _ in range(n)]
    succ: list[list[int]] = [[] for _ in range(n)]
    for tr, w in zip(skel.transitions, wa.weights):
        in_arcs[tr.dst].append((tr.src, w))
        succ[tr.src].append(tr.dst)
    comp, count = strongly_connected_components(n, succ)
    acyclic = count == n and all(tr.src != tr.dst for tr in skel.transitions)

    if acyclic and not force_iterative:
        d = [spec.zero] * n
        for q in sorted(range(n), key=lambda q: -comp[q]):
            acc = lam[q]
            for src, w in in_arcs[q]:
                acc = spec.plus(acc, spec.times(d[src], w))
            d[q] = acc
    else:
        d = list(lam)
        change = math.inf
        for _ in range(max_iter):
            nd = []
            change = 0.0
            for q in range(n):
                acc = lam[q]
                for src, w in in_arcs[q]:
                    acc = spec.plus(acc, spec.times(d[src], w))
                nd.append(acc)
                step = spec.delta(acc, d[q])
                if step > change:
                    change = step
            d = nd
            if change <= tol:
                break
        else:
            raise NonConvergent(
                f"componentwise change still {change:g} after {max_iter} sweeps"
            )

    total = spec.zero
    for q, v in wa.rho:
        total = spec.plus(total, spec.times(d[q], v))
    return total
