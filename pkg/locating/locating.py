import logging
from dataclasses import dataclass

from domination.solver import allGammaPSets, coverageTarget, gammaP, greedyCover
from graphs.choices import Verdict
from graphs.exceptions import GraphArgumentError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LocatingVerdict:
    """Raw findings over every gamma_p-set; nothing here assumes at least one case holds."""
    vertex: int
    containsVertex: bool
    containsNeighbor: bool
    containsDistanceTwo: bool
    familySize: int

    @property
    def anyCase(self):
        return self.containsVertex or self.containsNeighbor or self.containsDistanceTwo


def greedyHighDegree(g, p):
    return greedyCover(g, coverageTarget(g.order, p))


def greedyGap(g, p):
    """How many vertices the greedy set wastes over an optimum."""
    return len(greedyHighDegree(g, p)) - gammaP(g, p).gammaP


def requireMaxDegreeVertex(g, vertex):
    g.checkVertex(vertex)
    if g.degree(vertex) != g.maxDegree():
        raise GraphArgumentError(f'Vertex {vertex} has degree {g.degree(vertex)}, not the maximum {g.maxDegree()}')


def maxDegreeLocationVerdict(g, p, vertex):
    requireMaxDegreeVertex(g, vertex)
    if p.isZero():
        logger.warning('event=locating_boundary p=%s vertex=%s detail=only the empty set is a gamma_0-set', p, vertex)

    family = allGammaPSets(g, p)
    neighbors = g.neighbors(vertex)
    distanceTwo = g.distanceTwoNeighborhood(vertex)
    return LocatingVerdict(
        vertex=vertex,
        containsVertex=any(vertex in member for member in family),
        containsNeighbor=any(not member.isDisjoint(neighbors) for member in family),
        containsDistanceTwo=any(not member.isDisjoint(distanceTwo) for member in family),
        familySize=len(family),
    )


def secondNeighborhoodCheck(g, p, vertex):
    """
    When a maximum-degree vertex sits in no gamma_p-set, every gamma_p-set should keep at
    least two members within distance two of it. NOT_APPLICABLE when the vertex is in one.
    """
    requireMaxDegreeVertex(g, vertex)
    if p.isZero():
        logger.warning('event=locating_boundary p=%s vertex=%s detail=only the empty set is a gamma_0-set', p, vertex)

    family = allGammaPSets(g, p)
    if any(vertex in member for member in family):
        return Verdict.NOT_APPLICABLE

    reach = g.secondClosedNeighborhood(vertex)
    if all(len(member & reach) >= 2 for member in family):
        return Verdict.HOLDS
    return Verdict.VIOLATED
