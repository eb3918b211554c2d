import itertools
import logging
from functools import lru_cache

from django.conf import settings

from graphs.exceptions import GraphArgumentError
from graphs.structures import Graph

logger = logging.getLogger(__name__)

DEFAULT_MAX_ORDER = 7


@lru_cache(maxsize=None)
def pairOrder(order):
    """Vertex pairs in graph6 order: (0,1), (0,2), (1,2), (0,3), ..."""
    return tuple((i, j) for j in range(order) for i in range(j))


def adjacencyCode(g, permutation):
    """Upper-triangle bit string of g relabelled by permutation, first pair most significant."""
    code = 0
    adjacency = g.adjacency
    for i, j in pairOrder(g.order):
        code = code << 1 | (adjacency[permutation[i]] >> permutation[j] & 1)
    return code


def degreeClassPermutations(g):
    """Relabelings that list vertices by descending degree, permuting freely inside each degree class."""
    degrees = g.degrees()
    ordered = sorted(range(g.order), key=lambda vertex: (-degrees[vertex], vertex))
    classes = [list(group) for _, group in itertools.groupby(ordered, key=lambda vertex: degrees[vertex])]
    for arrangement in itertools.product(*(itertools.permutations(members) for members in classes)):
        yield tuple(vertex for members in arrangement for vertex in members)


def canonicalForm(g):
    """(code, permutation) minimising the adjacency bit string; isomorphic graphs share the code."""
    best = None
    for permutation in degreeClassPermutations(g):
        code = adjacencyCode(g, permutation)
        if best is None or code < best[0]:
            best = (code, permutation)
    return best or (0, ())


def canonicalGraph(g):
    _, permutation = canonicalForm(g)
    return g.relabel(list(permutation))


def maxEnumerationOrder():
    if settings.configured:
        return getattr(settings, 'ENUMERATION_MAX_ORDER', DEFAULT_MAX_ORDER)
    return DEFAULT_MAX_ORDER


def extend(g, neighborMask):
    """g with a new last vertex joined to neighborMask."""
    newVertex = g.order
    adjacency = [
        neighbors | (1 << newVertex if neighborMask >> vertex & 1 else 0)
        for vertex, neighbors in enumerate(g.adjacency)
    ]
    adjacency.append(neighborMask)
    return Graph(g.order + 1, tuple(adjacency))


def enumerateByOrder(maxOrder, connected=True):
    """
    Yield (order, graphs) for orders 1..maxOrder, each list holding one canonical
    representative per isomorphism class, sorted by canonical code. Order n is grown from
    order n - 1 by adding one vertex with every admissible neighbourhood; a connected graph
    always has a vertex whose removal leaves it connected, so nothing is missed.

    Not a sweep over every edge mask with a minimum over all n! labellings: levels extend
    the previous one and canonicalForm only tries degree-sorted relabellings, so class
    counts match that sweep while representatives may carry a different labelling.
    """
    cap = maxEnumerationOrder()
    if not isinstance(maxOrder, int) or not 1 <= maxOrder <= cap:
        raise GraphArgumentError(f'Enumeration order must be in 1..{cap}, got {maxOrder}')

    level = [Graph(1, (0,))]
    yield 1, level
    for order in range(2, maxOrder + 1):
        representatives = {}
        firstMask = 1 if connected else 0
        for base in level:
            for neighborMask in range(firstMask, 1 << base.order):
                candidate = extend(base, neighborMask)
                code, permutation = canonicalForm(candidate)
                if code not in representatives:
                    representatives[code] = candidate.relabel(list(permutation))

        level = [representatives[code] for code in sorted(representatives)]
        logger.info('event=enumeration_level order=%s connected=%s graphs=%s', order, connected, len(level))
        yield order, level


def enumerateConnectedGraphs(maxOrder):
    for _, graphs in enumerateByOrder(maxOrder, connected=True):
        yield from graphs


def enumerateAllGraphs(maxOrder):
    for _, graphs in enumerateByOrder(maxOrder, connected=False):
        yield from graphs
