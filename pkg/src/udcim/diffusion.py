"""Two-phase competitive diffusion: temporary activation, then final commitment.

Each round first collects every not-yet-final node whose incoming active
weight crosses its tendency-dependent threshold (temporary activation),
then commits each of those nodes to side A or B by comparing the incoming
weight sums. Rounds are synchronous: all comparisons inside one round see
the state as it was when the round started. Once final, a node never
changes side.

Threshold comparisons use exact floating-point ``>=``/``>``; callers that
care about boundaries should pick non-borderline weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Sequence

from .errors import ConfigError
from .graph import Tendency, WeightedDigraph


class NodeStatus(IntEnum):
    INACTIVE = 0
    FINAL_A = 1
    FINAL_B = 2


@dataclass(frozen=True)
class Thresholds:
    """Activation thresholds; theta1 gates own-side weight, theta1+theta2 opposing."""

    theta1: float
    theta2: float

    def __post_init__(self):
        if not (0.0 <= self.theta1 <= 1.0) or not (0.0 <= self.theta2 <= 1.0):
            raise ConfigError(
                f"thresholds ({self.theta1}, {self.theta2}) must lie in [0,1]"
            )

    @property
    def combined(self) -> float:
        return self.theta1 + self.theta2


@dataclass
class ActivationState:
    """Per-node diffusion status alongside the immutable original tendencies."""

    status: list[NodeStatus]
    tendency: Sequence[Tendency]

    @classmethod
    def initial(
        cls,
        graph: WeightedDigraph,
        seeds_a: Iterable[int] = (),
        seeds_b: Iterable[int] = (),
    ) -> "ActivationState":
        status = [NodeStatus.INACTIVE] * graph.n
        for u in seeds_a:
            status[u] = NodeStatus.FINAL_A
        for u in seeds_b:
            status[u] = NodeStatus.FINAL_B
        return cls(status=status, tendency=graph.tendencies)

    def is_final(self, u: int) -> bool:
        return self.status[u] != NodeStatus.INACTIVE

    def copy(self) -> "ActivationState":
        return ActivationState(status=list(self.status), tendency=self.tendency)

    def final_set(self, side: NodeStatus) -> set[int]:
        return {u for u, s in enumerate(self.status) if s == side}


@dataclass(frozen=True)
class DiffusionResult:
    final_state: ActivationState
    sigma_a: int
    sigma_b: int
    rounds: int


def _incoming_weights(
    graph: WeightedDigraph, state: ActivationState, u: int
) -> tuple[float, float]:
    """Sum of in-arc weights from final-A and final-B neighbors of u."""
    t_a = 0.0
    t_b = 0.0
    for v, w in graph.in_adj[u]:
        s = state.status[v]
        if s == NodeStatus.FINAL_A:
            t_a += w
        elif s == NodeStatus.FINAL_B:
            t_b += w
    return t_a, t_b


def temporary_active(
    graph: WeightedDigraph, state: ActivationState, thresholds: Thresholds
) -> list[int]:
    """Return the not-yet-final nodes crossing their activation threshold.

    A-tendency nodes activate on own-side weight >= theta1 or opposing
    weight >= theta1+theta2; B-tendency symmetrically; neutral nodes on
    total active weight >= theta1. Ascending node id order.
    """
    th1 = thresholds.theta1
    th12 = thresholds.combined
    out = []
    for u in range(graph.n):
        if state.is_final(u):
            continue
        t_a, t_b = _incoming_weights(graph, state, u)
        tend = state.tendency[u]
        if tend == Tendency.A:
            hit = t_a >= th1 or t_b >= th12
        elif tend == Tendency.B:
            hit = t_b >= th1 or t_a >= th12
        else:
            hit = t_a + t_b >= th1
        if hit:
            out.append(u)
    return out


def finalize(
    graph: WeightedDigraph,
    state: ActivationState,
    thresholds: Thresholds,
    temp_set: Iterable[int],
) -> tuple[ActivationState, bool]:
    """Commit every temporarily active node to a side; synchronous semantics.

    All weight sums are computed against the incoming ``state``, so the
    outcome does not depend on iteration order. A-tendency nodes fall to B
    only when opposing weight reaches max(own weight, theta1+theta2);
    B-tendency symmetrically; neutral nodes go to B only on a strict
    opposing majority (ties favor A).
    """
    new_state = state.copy()
    changed = False
    th12 = thresholds.combined
    for u in temp_set:
        if state.is_final(u):
            raise ConfigError(f"node {u} in temporary set is already final")
        t_a, t_b = _incoming_weights(graph, state, u)
        tend = state.tendency[u]
        if tend == Tendency.A:
            side = NodeStatus.FINAL_B if t_b >= max(t_a, th12) else NodeStatus.FINAL_A
        elif tend == Tendency.B:
            side = NodeStatus.FINAL_A if t_a >= max(t_b, th12) else NodeStatus.FINAL_B
        else:
            side = NodeStatus.FINAL_B if t_b > t_a else NodeStatus.FINAL_A
        new_state.status[u] = side
        changed = True
    return new_state, changed


def diffuse(
    graph: WeightedDigraph,
    thresholds: Thresholds,
    seeds_a: Iterable[int],
    seeds_b: Iterable[int],
) -> DiffusionResult:
    """Run the diffusion to its fixed point and count both sides.

    Seeds start final on their side and are never overturned. Counts
    include seeds. Executes at most n rounds; the round that finds no
    temporary activations is counted.
    """
    s_a = set(seeds_a)
    s_b = set(seeds_b)
    if s_a & s_b:
        raise ConfigError(f"seed sets overlap: {sorted(s_a & s_b)}")
    for u in s_a | s_b:
        if not (0 <= u < graph.n):
            raise ConfigError(f"seed node {u} out of range")

    state = ActivationState.initial(graph, s_a, s_b)
    rounds = 0
    for _ in range(max(graph.n, 0)):
        rounds += 1
        temp = temporary_active(graph, state, thresholds)
        if not temp:
            break
        state, _ = finalize(graph, state, thresholds, temp)

    status = state.status
    return DiffusionResult(
        final_state=state,
        sigma_a=sum(1 for s in status if s == NodeStatus.FINAL_A),
        sigma_b=sum(1 for s in status if s == NodeStatus.FINAL_B),
        rounds=rounds,
    )


def sigma(result: DiffusionResult, side: str) -> int:
    """Influence count for one side ('A' or 'B'), seeds included."""
    if side == "A":
        return result.sigma_a
    if side == "B":
        return result.sigma_b
    raise ConfigError(f"side must be 'A' or 'B', got {side!r}")
