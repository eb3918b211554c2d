import logging
from dataclasses import dataclass

from conjecture.enumeration import enumerateAllGraphs, enumerateConnectedGraphs
from domination.influence import influencingIntersection, influencingSet
from domination.solver import gammaP, isPDominating
from formulas.closedForms import (
    gammaHalfCompleteProduct,
    gammaHalfCompleteProductClosedForm,
    gammaHalfGrid,
    gammaHalfPath,
    gammaHalfPathComplete,
    halfCompleteProductWitness,
    halfPathCompleteWitness,
    halfPathWitness,
)
from formulas.influence import (
    influencingCompleteBipartite,
    influencingFullThreshold,
    influencingIntersectionCompleteBipartite,
    influencingIntersectionPath,
    influencingPath,
)
from graphs.formats import writeGraph6
from graphs.generators import complete, completeBipartite, path
from graphs.structures import Proportion, VertexSet, cartesianProduct

logger = logging.getLogger(__name__)

HALF = Proportion(1, 2)


@dataclass(frozen=True)
class Discrepancy:
    suite: str
    subject: str
    expected: str
    actual: str

    def __str__(self):
        return f'{self.suite}: {self.subject}: expected {self.expected}, got {self.actual}'


def describe(value):
    return value.label() if isinstance(value, VertexSet) else str(value)


def compare(discrepancies, suite, subject, expected, actual):
    if expected != actual:
        discrepancy = Discrepancy(suite, subject, describe(expected), describe(actual))
        logger.warning('event=discrepancy suite=%s subject=%s expected=%s actual=%s', suite, subject, discrepancy.expected, discrepancy.actual)
        discrepancies.append(discrepancy)


def checkWitness(discrepancies, suite, subject, g, witness, size):
    if len(witness) != size or not isPDominating(g, witness, HALF):
        compare(discrepancies, suite, subject, f'{size} vertices dominating half', witness)


def graphFamily(graphs, maxOrder, includeDisconnected=False):
    if graphs is not None:
        return list(graphs)
    return list(enumerateAllGraphs(maxOrder) if includeDisconnected else enumerateConnectedGraphs(maxOrder))


def verifyHalfPath(maxOrder=24):
    discrepancies = []
    for n in range(1, maxOrder + 1):
        g = path(n)
        compare(discrepancies, 'half-path', f'P_{n}', gammaHalfPath(n), gammaP(g, HALF).gammaP)
        checkWitness(discrepancies, 'half-path-witness', f'P_{n}', g, halfPathWitness(n), gammaHalfPath(n))
    return discrepancies


def verifyHalfGrid(maxSide=6, maxLadder=12):
    """Ladders P_2□P_n run up to maxLadder, wider grids up to maxSide."""
    discrepancies = []
    for m in range(2, maxSide + 1):
        for n in range(m, (maxLadder if m == 2 else maxSide) + 1):
            g = cartesianProduct(path(m), path(n))
            compare(discrepancies, 'half-grid', f'P_{m}□P_{n}', gammaHalfGrid(m, n), gammaP(g, HALF).gammaP)
    return discrepancies


def verifyHalfCompleteProduct(maxSide=6):
    discrepancies = []
    for m in range(2, maxSide + 1):
        for n in range(2, m + 1):
            g = cartesianProduct(complete(m), complete(n))
            expected = gammaHalfCompleteProduct(m, n)
            compare(discrepancies, 'half-complete-product', f'K_{m}□K_{n}', expected, gammaP(g, HALF).gammaP)
            checkWitness(discrepancies, 'half-complete-product-witness', f'K_{m}□K_{n}', g, halfCompleteProductWitness(m, n), expected)
    return discrepancies


def verifyCompleteProductClosedForm(maxSide=100):
    discrepancies = []
    for m in range(1, maxSide + 1):
        for n in range(1, maxSide + 1):
            compare(
                discrepancies,
                'complete-product-closed-form',
                f'K_{m}□K_{n}',
                gammaHalfCompleteProduct(m, n),
                gammaHalfCompleteProductClosedForm(m, n),
            )
    return discrepancies


def verifyHalfPathComplete(maxPath=8, maxClique=5):
    discrepancies = []
    for n in range(2, maxPath + 1):
        for m in range(2, maxClique + 1):
            g = cartesianProduct(path(n), complete(m))
            expected = gammaHalfPathComplete(n, m)
            compare(discrepancies, 'half-path-complete', f'P_{n}□K_{m}', expected, gammaP(g, HALF).gammaP)
            checkWitness(discrepancies, 'half-path-complete-witness', f'P_{n}□K_{m}', g, halfPathCompleteWitness(n, m), expected)
    return discrepancies


def verifyPathInfluence(minOrder=3, maxOrder=12):
    discrepancies = []
    for n in range(minOrder, maxOrder + 1):
        g = path(n)
        for j in range(1, n + 1):
            p = Proportion(j, n)
            compare(discrepancies, 'path-influence', f'P_{n} at {j}/{n}', influencingPath(n, p).members, influencingSet(g, p))
        compare(discrepancies, 'path-intersection', f'P_{n}', influencingIntersectionPath(n), influencingIntersection(g))
    return discrepancies


def verifyCompleteBipartiteInfluence(maxSide=6):
    discrepancies = []
    for m in range(1, maxSide + 1):
        for n in range(1, m + 1):
            g = completeBipartite(m, n)
            for k in range(1, m + n + 1):
                p = Proportion(k, m + n)
                compare(
                    discrepancies,
                    'complete-bipartite-influence',
                    f'K_({m},{n}) at {k}/{m + n}',
                    influencingCompleteBipartite(m, n, p).members,
                    influencingSet(g, p),
                )
            compare(
                discrepancies,
                'complete-bipartite-intersection',
                f'K_({m},{n})',
                influencingIntersectionCompleteBipartite(m, n),
                influencingIntersection(g),
            )
    return discrepancies


def verifyLowProportionInfluence(graphs=None, maxOrder=7):
    """On a connected graph the influencing sets at 1/n and 2/n are all of V."""
    discrepancies = []
    for g in graphFamily(graphs, maxOrder):
        for k in range(1, min(2, g.order) + 1):
            compare(discrepancies, 'low-proportion-influence', f'{writeGraph6(g)} at {k}/{g.order}', g.vertices(), influencingSet(g, Proportion(k, g.order)))
    return discrepancies


def verifyFullThreshold(graphs=None, maxOrder=7):
    """Every p <= (delta + 1)/n gives the whole vertex set."""
    discrepancies = []
    for g in graphFamily(graphs, maxOrder):
        threshold = influencingFullThreshold(g)
        for k in range(1, threshold.num * g.order // threshold.den + 1):
            compare(discrepancies, 'full-threshold', f'{writeGraph6(g)} at {k}/{g.order}', g.vertices(), influencingSet(g, Proportion(k, g.order)))
    return discrepancies


def verifyMaxDegreeThreshold(graphs=None, maxOrder=7):
    """At p = (Delta + 1)/n the influencing set is exactly the maximum-degree vertices."""
    discrepancies = []
    for g in graphFamily(graphs, maxOrder):
        p = Proportion(g.maxDegree() + 1, g.order)
        compare(discrepancies, 'max-degree-threshold', f'{writeGraph6(g)} at {p}', g.maxDegreeVertices(), influencingSet(g, p))
    return discrepancies


FORMULA_SUITES = (
    verifyHalfPath,
    verifyHalfGrid,
    verifyHalfCompleteProduct,
    verifyCompleteProductClosedForm,
    verifyHalfPathComplete,
    verifyPathInfluence,
    verifyCompleteBipartiteInfluence,
)

INFLUENCE_LEMMA_SUITES = (
    verifyLowProportionInfluence,
    verifyFullThreshold,
    verifyMaxDegreeThreshold,
)
