import logging
from dataclasses import dataclass

from graphs.exceptions import GraphArgumentError
from graphs.structures import Proportion, VertexSet

logger = logging.getLogger(__name__)

DOMINATION = Proportion(1, 1)


@dataclass(frozen=True)
class SolveResult:
    gammaP: int
    witness: VertexSet


@dataclass(frozen=True)
class GammaPSetFamily:
    size: int
    sets: tuple

    def __iter__(self):
        return iter(self.sets)

    def __len__(self):
        return len(self.sets)

    def union(self):
        bits = 0
        for member in self.sets:
            bits |= member.bits
        order = self.sets[0].order if self.sets else 0
        return VertexSet(bits, order)


def coverageTarget(n, p):
    """Least c with c * p.den >= p.num * n."""
    if n < 0:
        raise GraphArgumentError(f'Graph order must be nonnegative, got {n}')
    return -(-p.num * n // p.den)


def coverageLowerBound(g, p):
    target = coverageTarget(g.order, p)
    if target == 0:
        return 0
    return -(-target // max(mask.bit_count() for mask in g.closedMasks))


def coverage(g, vertexSet):
    return len(g.closedNeighborhoodOfSet(vertexSet))


def isPDominating(g, vertexSet, p):
    return coverage(g, vertexSet) >= coverageTarget(g.order, p)


def greedyCover(g, target):
    """Add the vertex covering the most new vertices, lower index on ties, until target is reached."""
    if not 0 <= target <= g.order:
        raise GraphArgumentError(f'Coverage target {target} is outside 0..{g.order}')

    closed = g.closedMasks
    chosen = covered = 0
    while covered.bit_count() < target:
        best = max(range(g.order), key=lambda vertex: ((closed[vertex] & ~covered).bit_count(), -vertex))
        chosen |= 1 << best
        covered |= closed[best]
    return VertexSet(chosen, g.order)


class CoverageSearch:
    """
    Depth-first selection of exactly k vertices in ascending index order. A prefix is
    abandoned when even the largest closed neighbourhoods left cannot lift its coverage
    to the target, so sets come out in lexicographic order of their sorted indices.
    """

    def __init__(self, g, target):
        self.order = g.order
        self.closed = g.closedMasks
        self.target = target
        self.suffixMax = [0] * (g.order + 1)
        for vertex in range(g.order - 1, -1, -1):
            self.suffixMax[vertex] = max(self.suffixMax[vertex + 1], self.closed[vertex].bit_count())
        self.visited = 0

    def iterSets(self, k):
        yield from self.descend(0, k, 0, 0)

    def first(self, k):
        return next(self.iterSets(k), None)

    def descend(self, start, remaining, chosen, covered):
        self.visited += 1
        if remaining == 0:
            if covered.bit_count() >= self.target:
                yield chosen
            return

        if self.order - start < remaining:
            return
        if covered.bit_count() + remaining * self.suffixMax[start] < self.target:
            return

        for vertex in range(start, self.order - remaining + 1):
            yield from self.descend(vertex + 1, remaining - 1, chosen | 1 << vertex, covered | self.closed[vertex])


def gammaP(g, p):
    target = coverageTarget(g.order, p)
    if target == 0:
        return SolveResult(0, VertexSet(0, g.order))

    upper = len(greedyCover(g, target))
    search = CoverageSearch(g, target)
    for k in range(coverageLowerBound(g, p), upper + 1):
        found = search.first(k)
        if found is not None:
            logger.debug('event=gamma_p_solved order=%s p=%s gamma_p=%s greedy=%s nodes=%s', g.order, p, k, upper, search.visited)
            return SolveResult(k, VertexSet(found, g.order))

    raise AssertionError(f'No p-dominating set of size <= {upper} found for p={p}')


def gamma(g):
    return gammaP(g, DOMINATION)


def allGammaPSets(g, p):
    result = gammaP(g, p)
    if result.gammaP == 0:
        return GammaPSetFamily(0, (result.witness,))

    search = CoverageSearch(g, coverageTarget(g.order, p))
    sets = tuple(VertexSet(bits, g.order) for bits in search.iterSets(result.gammaP))
    logger.debug('event=gamma_p_sets_enumerated order=%s p=%s size=%s count=%s', g.order, p, result.gammaP, len(sets))
    return GammaPSetFamily(result.gammaP, sets)


def findDisjointPair(g, p, q):
    """First (gamma_p-set, gamma_q-set) pair sharing no vertex, in lexicographic order, or None."""
    for first in allGammaPSets(g, p):
        for second in allGammaPSets(g, q):
            if first.isDisjoint(second):
                return first, second
    return None
