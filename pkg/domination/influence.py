from dataclasses import dataclass

from domination.solver import allGammaPSets
from graphs.exceptions import GraphArgumentError
from graphs.structures import Proportion, VertexSet


@dataclass(frozen=True)
class InfluenceStep:
    coverage: int
    proportion: Proportion
    members: VertexSet

    def label(self):
        return f'{self.coverage}/{self.members.order}'


def influencingSet(g, p):
    """Union of every gamma_p-set; empty at p = 0."""
    return allGammaPSets(g, p).union()


def influenceProfile(g):
    """Influencing sets at p = k/n for k = 1..n."""
    if g.order < 1:
        raise GraphArgumentError('Influence profile needs a graph with at least one vertex')
    return [
        InfluenceStep(k, Proportion(k, g.order), influencingSet(g, Proportion(k, g.order)))
        for k in range(1, g.order + 1)
    ]


def influencingIntersection(g, profile=None):
    profile = profile if profile is not None else influenceProfile(g)
    members = VertexSet.full(g.order)
    for step in profile:
        members = members & step.members
    return members
