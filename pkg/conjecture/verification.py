from conjecture.products import checkEdgeProductBound, checkHalfDominationOrderBound, checkPathProductBound
from formulas.verification import compare, graphFamily
from graphs.choices import Verdict
from graphs.formats import writeGraph6


def verifyEdgeProductBound(graphs=None, maxOrder=5):
    discrepancies = []
    for g in graphFamily(graphs, maxOrder):
        check = checkEdgeProductBound(g)
        if check.verdict == Verdict.VIOLATED:
            compare(discrepancies, 'edge-product-bound', f'{writeGraph6(g)}□P_2', f'>= {check.bound}', check.gpProduct)
    return discrepancies


def verifyPathProductBound(graphs=None, maxOrder=5, maxPath=6):
    discrepancies = []
    for g in graphFamily(graphs, maxOrder):
        for m in range(2, maxPath + 1):
            check = checkPathProductBound(g, m)
            if check.verdict == Verdict.VIOLATED:
                compare(discrepancies, 'path-product-bound', f'{writeGraph6(g)}□P_{m}', f'>= {check.bound}', check.gpProduct)
    return discrepancies


def verifyHalfDominationOrderBound(graphs=None, maxOrder=7, includeDisconnected=False):
    """Connected graphs unless includeDisconnected; the bound does not cover disconnected graphs and some of them break it."""
    discrepancies = []
    for g in graphFamily(graphs, maxOrder, includeDisconnected):
        check = checkHalfDominationOrderBound(g)
        if check.verdict == Verdict.VIOLATED:
            compare(discrepancies, 'half-domination-order-bound', f'{writeGraph6(g)} ({check.regime.value})', f'order >= {check.required}', check.order)
    return discrepancies


PRODUCT_SUITES = (
    verifyEdgeProductBound,
    verifyPathProductBound,
    verifyHalfDominationOrderBound,
)

# suites that can widen their family to disconnected graphs
DISCONNECTED_SUITES = (
    verifyHalfDominationOrderBound,
)
