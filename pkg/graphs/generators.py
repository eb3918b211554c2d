from graphs.exceptions import GraphArgumentError, GraphParseError
from graphs.formats import isIndexToken
from graphs.structures import Graph


def requireAtLeast(name, value, minimum):
    if not isinstance(value, int) or value < minimum:
        raise GraphArgumentError(f'{name} must be an integer >= {minimum}, got {value}')


def path(n):
    """P_n with v_i stored at index i - 1."""
    requireAtLeast('path order', n, 1)
    return Graph.fromEdges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    requireAtLeast('cycle order', n, 3)
    return Graph.fromEdges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    requireAtLeast('complete graph order', n, 1)
    return Graph.fromEdges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def completeBipartite(m, n):
    """K_{m,n}: side V_1 is 0..m-1, side V_2 is m..m+n-1."""
    requireAtLeast('first side', m, 1)
    requireAtLeast('second side', n, 1)
    return Graph.fromEdges(m + n, [(u, m + v) for u in range(m) for v in range(n)])


def star(k):
    requireAtLeast('star size', k, 1)
    return Graph.fromEdges(k + 1, [(0, leaf) for leaf in range(1, k + 1)])


def subdividedStar(k):
    """Centre 0, inner vertices 1..k, leaf k + i hanging off inner vertex i."""
    requireAtLeast('subdivided star size', k, 1)
    edges = [(0, inner) for inner in range(1, k + 1)]
    edges += [(inner, k + inner) for inner in range(1, k + 1)]
    return Graph.fromEdges(2 * k + 1, edges)


def hubPairGraph():
    # 0 apex (maximum degree); 1-4 mids; 5, 6 hubs; 7, 8 leaves of the hubs
    return Graph.fromEdges(9, [
        (0, 1), (0, 2), (0, 3), (0, 4),
        (1, 5), (2, 5), (3, 6), (4, 6),
        (5, 7), (6, 8),
    ])


def pendantWheelGraph():
    # 0 hub; 1-4 rim, cycle 1-2-3-4-1 and all adjacent to the hub; 5-8 pendants of 1-4
    return Graph.fromEdges(9, [
        (0, 1), (0, 2), (0, 3), (0, 4),
        (1, 2), (2, 3), (3, 4), (4, 1),
        (1, 5), (2, 6), (3, 7), (4, 8),
    ])


def twinBroomTree():
    # 0 root; 1 and 4 leaf children; 2 and 3 brooms with leaves 5-7 and 8-10
    return Graph.fromEdges(11, [
        (0, 1), (0, 2), (0, 3), (0, 4),
        (2, 5), (2, 6), (2, 7),
        (3, 8), (3, 9), (3, 10),
    ])


GENERATORS = {
    'path': (path, 1),
    'cycle': (cycle, 1),
    'complete': (complete, 1),
    'complete-bipartite': (completeBipartite, 2),
    'star': (star, 1),
    'subdivided-star': (subdividedStar, 1),
    'hub-pair': (hubPairGraph, 0),
    'pendant-wheel': (pendantWheelGraph, 0),
    'twin-broom': (twinBroomTree, 0),
    # short names for the three fixtures
    'fig2': (hubPairGraph, 0),
    'fig3': (pendantWheelGraph, 0),
    'fig4': (twinBroomTree, 0),
}


def fromSpec(text):
    """Build a graph from a generator spec such as 'path:6' or 'complete-bipartite:4,2'."""
    name, separator, rawArguments = (text or '').strip().partition(':')
    if name not in GENERATORS:
        raise GraphParseError(f'Unknown generator {name!r}; expected one of {", ".join(sorted(GENERATORS))}', position=0)

    generator, arity = GENERATORS[name]
    tokens = [token.strip() for token in rawArguments.split(',')] if separator else []
    if len(tokens) != arity:
        raise GraphParseError(f'Generator {name!r} takes {arity} argument(s), got {len(tokens)}', position=len(name))

    arguments = []
    offset = len(name) + 1
    for token in tokens:
        if not isIndexToken(token):
            raise GraphParseError(f'Generator argument {token!r} is not a nonnegative integer', position=offset)
        arguments.append(int(token))
        offset += len(token) + 1
    return generator(*arguments)
