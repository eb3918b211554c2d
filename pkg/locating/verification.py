from domination.solver import isPDominating
from formulas.verification import compare, graphFamily
from graphs.choices import Verdict
from graphs.formats import writeGraph6
from graphs.structures import Proportion
from locating.locating import greedyHighDegree, maxDegreeLocationVerdict, secondNeighborhoodCheck


def positiveProportions(g):
    return [Proportion(k, g.order) for k in range(1, g.order + 1)]


def verifyMaxDegreeLocation(graphs=None, maxOrder=6):
    """Some gamma_p-set meets v, N(v) or the distance-two ring of every maximum-degree vertex v."""
    discrepancies = []
    for g in graphFamily(graphs, maxOrder):
        for p in positiveProportions(g):
            for vertex in g.maxDegreeVertices():
                verdict = maxDegreeLocationVerdict(g, p, vertex)
                compare(discrepancies, 'max-degree-location', f'{writeGraph6(g)} at {p} v={vertex}', True, verdict.anyCase)
    return discrepancies


def verifySecondNeighborhood(graphs=None, maxOrder=6):
    discrepancies = []
    for g in graphFamily(graphs, maxOrder):
        for p in positiveProportions(g):
            for vertex in g.maxDegreeVertices():
                verdict = secondNeighborhoodCheck(g, p, vertex)
                if verdict == Verdict.VIOLATED:
                    compare(discrepancies, 'second-neighborhood', f'{writeGraph6(g)} at {p} v={vertex}', Verdict.HOLDS.value, verdict.value)
    return discrepancies


def verifyGreedyValidity(graphs=None, maxOrder=7):
    discrepancies = []
    for g in graphFamily(graphs, maxOrder):
        for p in positiveProportions(g):
            greedy = greedyHighDegree(g, p)
            compare(discrepancies, 'greedy-validity', f'{writeGraph6(g)} at {p}', True, isPDominating(g, greedy, p))
    return discrepancies


LOCATING_SUITES = (
    verifyMaxDegreeLocation,
    verifySecondNeighborhood,
    verifyGreedyValidity,
)
