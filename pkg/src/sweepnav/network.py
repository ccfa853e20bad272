"""Winner-take-all scoring network with instar weight adaptation.

Each movement candidate is encoded as a four-component feature vector,
scored by a dot product against the current weight vector, and the single
highest-scoring candidate wins (first index on ties). After each winning
move the weights shift toward the winner's features by the instar rule
W' = W + eta * (f - W), so the network drifts toward the feature profile
of moves that keep getting chosen.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, NamedTuple, Sequence

from .errors import DegenerateCandidateError, NoCandidatesError
from .grid import GridMap, Point, euclid
from .sensor import SensedPoint


class FeatureVector(NamedTuple):
    """Candidate encoding, all components bounded.

    goal_progress: Euclidean distance gained toward the goal per unit of
        slide range, clamped to [-1, 1].
    heading_alignment: cosine between the move direction and the goal
        direction, in [-1, 1]; defined as 1 if the pose already sits on the
        goal (the direction degenerates, but that case terminates the plan
        loop before features are ever computed).
    clearance_norm: ray clearance / slide range, in [0, 1]; always 1 for a
        candidate since only full-extent rays are candidates.
    novelty: 1 / (1 + visits to the candidate cell), in (0, 1].
    """

    goal_progress: float
    heading_alignment: float
    clearance_norm: float
    novelty: float


class WeightVector(NamedTuple):
    w1: float
    w2: float
    w3: float
    w4: float


DEFAULT_WEIGHTS = WeightVector(1.0, 1.0, 0.25, 0.5)


@dataclass
class AdaptiveNetwork:
    """Mutable per-run planner memory: weights, visit counts, dead ends.

    virtual_blocks are cells abandoned by backtracking; they are planner
    memory, not map obstacles, and by construction never hold the start or
    goal. State is private to one plan run; runs never share a network.
    """

    weights: WeightVector = DEFAULT_WEIGHTS
    eta: float = 0.2
    visit_counts: dict[Point, int] = field(default_factory=dict)
    virtual_blocks: set[Point] = field(default_factory=set)

    def visits(self, p: Point) -> int:
        return self.visit_counts.get(p, 0)

    def record_visit(self, p: Point) -> None:
        self.visit_counts[p] = self.visit_counts.get(p, 0) + 1

    def train_on(self, f: FeatureVector) -> None:
        self.weights = train(self.weights, f, self.eta)


def extract_features(
    grid: GridMap,
    current: Point,
    cand: SensedPoint,
    goal: Point,
    x: float,
    visit_counts: Mapping[Point, int],
) -> FeatureVector:
    """Encode one unblocked candidate relative to the current pose and goal."""
    current = Point(*current)
    goal = Point(*goal)
    end = cand.endpoint
    if end == current:
        raise DegenerateCandidateError(f"candidate endpoint equals pose {current}")

    progress = (euclid(current, goal) - euclid(end, goal)) / x
    goal_progress = max(-1.0, min(1.0, progress))

    mv = (end.x - current.x, end.y - current.y)
    gv = (goal.x - current.x, goal.y - current.y)
    gnorm = euclid(current, goal)
    if gnorm == 0:
        heading = 1.0
    else:
        mnorm = euclid(current, end)
        heading = (mv[0] * gv[0] + mv[1] * gv[1]) / (mnorm * gnorm)
        heading = max(-1.0, min(1.0, heading))

    clearance_norm = min(1.0, cand.clearance / x)
    novelty = 1.0 / (1.0 + visit_counts.get(end, 0))
    return FeatureVector(goal_progress, heading, clearance_norm, novelty)


def score(W: WeightVector, f: FeatureVector) -> float:
    """Activation of one candidate: the dot product W . f."""
    return W.w1 * f.goal_progress + W.w2 * f.heading_alignment + W.w3 * f.clearance_norm + W.w4 * f.novelty


def select_winner(W: WeightVector, feats: Sequence[tuple[SensedPoint, FeatureVector]]) -> int:
    """Index of the highest-scoring candidate; ties keep the earliest index.

    Sweep order is increasing angle, so a tie resolves to the smallest angle.
    """
    if not feats:
        raise NoCandidatesError("no candidates to select from")
    best_i = 0
    best_s = score(W, feats[0][1])
    for i in range(1, len(feats)):
        s = score(W, feats[i][1])
        if s > best_s:
            best_i, best_s = i, s
    return best_i


def train(W: WeightVector, f_winner: FeatureVector, eta: float) -> WeightVector:
    """Instar update toward the winning features: W' = W + eta * (f - W).

    Componentwise, W' lies between W and f and the gap to f contracts by
    exactly (1 - eta). eta must lie strictly inside (0, 1).
    """
    return WeightVector(
        W.w1 + eta * (f_winner.goal_progress - W.w1),
        W.w2 + eta * (f_winner.heading_alignment - W.w2),
        W.w3 + eta * (f_winner.clearance_norm - W.w3),
        W.w4 + eta * (f_winner.novelty - W.w4),
    )
