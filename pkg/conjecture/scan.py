import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass

from django.conf import settings
from django.core.cache import cache

from conjecture.enumeration import enumerateAllGraphs, enumerateConnectedGraphs
from domination.solver import gammaP
from formulas.closedForms import conjecturedLowerBound
from graphs.choices import Regime
from graphs.exceptions import GraphArgumentError, VertexCapExceeded
from graphs.formats import writeGraph6
from graphs.structures import Proportion, VertexSet, cartesianProduct, vertexCap

logger = logging.getLogger(__name__)

RECORD_FIELDS = ('g6_g', 'g6_h', 'p', 'gp_g', 'gp_h', 'gp_prod', 'holds', 'witness', 'regime')


@dataclass(frozen=True)
class ScanReport:
    g6G: str
    g6H: str
    p: Proportion
    gpG: int
    gpH: int
    gpProduct: int
    holds: bool
    witness: VertexSet | None = None
    regime: str = Regime.CONNECTED

    def __post_init__(self):
        if self.holds != (self.gpProduct >= conjecturedLowerBound(self.gpG, self.gpH)):
            raise GraphArgumentError(f'Report for {self.g6G} x {self.g6H} contradicts its own values')
        if (self.witness is None) != self.holds:
            raise GraphArgumentError('A witness is recorded exactly when the inequality fails')

    def record(self):
        witness = self.witness.record() if self.witness is not None else ''
        values = (self.g6G, self.g6H, self.p, self.gpG, self.gpH, self.gpProduct, str(self.holds).lower(), witness, self.regime)
        return '\t'.join(str(value) for value in values)


@dataclass(frozen=True)
class ScanSummary:
    pairs: int
    failures: tuple
    regime: str

    def line(self):
        return f'pairs={self.pairs}, failures={len(self.failures)}'


def cachedGammaP(g, p):
    key = f'gamma-p:{writeGraph6(g)}:{p}'
    value = cache.get(key)
    if value is None:
        value = gammaP(g, p).gammaP
        cache.set(key, value)
    return value


def solveProduct(g, h, p):
    """Worker entry point; touches no Django settings beyond the optional vertex cap."""
    result = gammaP(cartesianProduct(g, h), p)
    return result.gammaP, result.witness


def buildReport(g, h, p, gpG, gpH, productResult, regime):
    gpProduct, witness = productResult
    holds = gpProduct >= conjecturedLowerBound(gpG, gpH)
    return ScanReport(
        g6G=writeGraph6(g),
        g6H=writeGraph6(h),
        p=p,
        gpG=gpG,
        gpH=gpH,
        gpProduct=gpProduct,
        holds=holds,
        witness=None if holds else witness,
        regime=regime,
    )


def checkProductInequality(g, h, p, regime=Regime.CONNECTED):
    cap = vertexCap()
    if g.order * h.order > cap:
        raise VertexCapExceeded(g.order * h.order, cap)
    return buildReport(g, h, p, cachedGammaP(g, p), cachedGammaP(h, p), solveProduct(g, h, p), regime)


def scanWorkers():
    return max(1, getattr(settings, 'SCAN_WORKERS', 1))


def scanFamily(graphs, p, regime, workers=None):
    """
    Check every unordered pair (including G with itself) of the family, ordered
    lexicographically by graph6. Only failing reports are kept.
    """
    family = sorted(graphs, key=writeGraph6)
    if not family:
        return ScanSummary(0, (), regime)

    cap = vertexCap()
    largest = max(g.order for g in family)
    if largest * largest > cap:
        raise VertexCapExceeded(largest * largest, cap)

    factorValues = [cachedGammaP(g, p) for g in family]
    pairs = [(i, j) for i in range(len(family)) for j in range(i, len(family))]
    workers = workers or scanWorkers()
    logger.info('event=scan_started regime=%s p=%s graphs=%s pairs=%s workers=%s', regime, p, len(family), len(pairs), workers)

    productResults = {}
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = {executor.submit(solveProduct, family[i], family[j], p): index for index, (i, j) in enumerate(pairs)}
            for future in as_completed(futures):
                productResults[futures[future]] = future.result()
    else:
        for index, (i, j) in enumerate(pairs):
            productResults[index] = solveProduct(family[i], family[j], p)

    failures = []
    for index, (i, j) in enumerate(pairs):
        report = buildReport(family[i], family[j], p, factorValues[i], factorValues[j], productResults[index], regime)
        if not report.holds:
            logger.warning('event=scan_failure regime=%s g=%s h=%s p=%s gp_prod=%s', regime, report.g6G, report.g6H, p, report.gpProduct)
            failures.append(report)

    logger.info('event=scan_finished regime=%s pairs=%s failures=%s', regime, len(pairs), len(failures))
    return ScanSummary(len(pairs), tuple(failures), regime)


def scanConjecture(maxOrder, p, includeDisconnected=False, workers=None):
    cap = vertexCap()
    if isinstance(maxOrder, int) and maxOrder * maxOrder > cap:
        raise VertexCapExceeded(maxOrder * maxOrder, cap)

    if includeDisconnected:
        return scanFamily(list(enumerateAllGraphs(maxOrder)), p, Regime.ALL, workers)
    return scanFamily(list(enumerateConnectedGraphs(maxOrder)), p, Regime.CONNECTED, workers)
