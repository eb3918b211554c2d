import logging
from dataclasses import dataclass

from domination.solver import gammaP
from graphs.choices import Regime, Verdict
from graphs.exceptions import GraphArgumentError
from graphs.generators import path
from graphs.structures import Proportion, cartesianProduct

logger = logging.getLogger(__name__)

HALF = Proportion(1, 2)
ORDER_BOUNDS = {2: 7, 3: 13}


@dataclass(frozen=True)
class ProductBoundCheck:
    """gamma_1/2(G□P_m) against gamma_1/2(G) * gamma_1/2(P_m)."""
    m: int
    gpG: int
    gpPath: int | None
    gpProduct: int | None
    verdict: str

    @property
    def holds(self):
        return self.verdict != Verdict.VIOLATED

    @property
    def bound(self):
        return None if self.gpPath is None else self.gpG * self.gpPath


@dataclass(frozen=True)
class OrderBoundCheck:
    gpG: int
    order: int
    required: int | None
    regime: str
    verdict: str


def compareToPathProduct(g, m, gpG):
    gpPath = gammaP(path(m), HALF).gammaP
    gpProduct = gammaP(cartesianProduct(g, path(m)), HALF).gammaP
    verdict = Verdict.HOLDS if gpProduct >= gpG * gpPath else Verdict.VIOLATED
    if verdict == Verdict.VIOLATED:
        logger.warning('event=product_bound_violated order=%s m=%s gp_g=%s gp_path=%s gp_prod=%s', g.order, m, gpG, gpPath, gpProduct)
    return ProductBoundCheck(m, gpG, gpPath, gpProduct, verdict)


def checkEdgeProductBound(g):
    """gamma_1/2(G□P_2) >= gamma_1/2(G)."""
    if g.order < 1:
        raise GraphArgumentError('Product bound needs a nonempty graph')
    return compareToPathProduct(g, 2, gammaP(g, HALF).gammaP)


def checkPathProductBound(g, m):
    """
    gamma_1/2(G□P_m) >= k * gamma_1/2(P_m) when gamma_1/2(G) = k is 1, 2 or 3.
    Other values of k are not covered and come back NOT_APPLICABLE.
    """
    if g.order < 1:
        raise GraphArgumentError('Product bound needs a nonempty graph')
    if not isinstance(m, int) or m < 2:
        raise GraphArgumentError(f'Path factor needs m >= 2, got {m}')

    gpG = gammaP(g, HALF).gammaP
    if gpG not in (1, 2, 3):
        return ProductBoundCheck(m, gpG, None, None, Verdict.NOT_APPLICABLE)
    return compareToPathProduct(g, m, gpG)


def checkHalfDominationOrderBound(g):
    """gamma_1/2(G) = 2 forces n >= 7 and gamma_1/2(G) = 3 forces n >= 13."""
    gpG = gammaP(g, HALF).gammaP
    regime = Regime.CONNECTED if g.isConnected() else Regime.ALL
    required = ORDER_BOUNDS.get(gpG)
    if required is None:
        return OrderBoundCheck(gpG, g.order, None, regime, Verdict.NOT_APPLICABLE)

    verdict = Verdict.HOLDS if g.order >= required else Verdict.VIOLATED
    if verdict == Verdict.VIOLATED:
        logger.warning('event=order_bound_violated regime=%s order=%s gp_g=%s required=%s', regime, g.order, gpG, required)
    return OrderBoundCheck(gpG, g.order, required, regime, verdict)
