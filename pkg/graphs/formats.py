import logging

import networkx as nx
from django.template.loader import render_to_string

from graphs.exceptions import GraphArgumentError, GraphParseError, VertexCapExceeded
from graphs.structures import Graph, vertexCap

logger = logging.getLogger(__name__)

GRAPH6_HEADER = '>>graph6<<'
GRAPH6_LOW = 63
GRAPH6_HIGH = 126
DOT_TEMPLATE = 'graphs/graph.dot'


def graph6Order(text):
    """Return (order, header length) of a graph6 string whose characters are already validated."""
    values = [ord(character) - GRAPH6_LOW for character in text]
    if values[0] != 63:
        return values[0], 1

    if len(values) >= 2 and values[1] == 63:
        width, start = 6, 2
    else:
        width, start = 3, 1

    if len(values) < start + width:
        raise GraphParseError('graph6 order header is truncated', position=len(values))

    order = 0
    for value in values[start:start + width]:
        order = order << 6 | value
    return order, start + width


def parseGraph6(text, line=None):
    body = (text or '').strip()
    offset = 0
    if body.startswith(GRAPH6_HEADER):
        body = body[len(GRAPH6_HEADER):]
        offset = len(GRAPH6_HEADER)

    if not body:
        raise GraphParseError('graph6 string is empty', line=line)

    for position, character in enumerate(body):
        if not GRAPH6_LOW <= ord(character) <= GRAPH6_HIGH:
            raise GraphParseError(f'Invalid graph6 character {character!r}', line=line, position=offset + position)

    order, headerLength = graph6Order(body)
    cap = vertexCap()
    if order > cap:
        raise VertexCapExceeded(order, cap)

    bitCount = order * (order - 1) // 2
    expected = -(-bitCount // 6)
    actual = len(body) - headerLength
    if actual != expected:
        raise GraphParseError(
            f'graph6 string for order {order} needs {expected} data characters, got {actual}',
            line=line,
            position=offset + len(body),
        )

    padding = expected * 6 - bitCount
    if expected and (ord(body[-1]) - GRAPH6_LOW) & ((1 << padding) - 1):
        raise GraphParseError('graph6 padding bits must be zero', line=line, position=offset + len(body) - 1)

    decoded = nx.from_graph6_bytes(body.encode('ascii'))
    return Graph.fromEdges(order, decoded.edges())


def toNetworkx(g):
    graph = nx.Graph()
    graph.add_nodes_from(range(g.order))
    graph.add_edges_from(g.edges())
    return graph


def writeGraph6(g):
    return nx.to_graph6_bytes(toNetworkx(g), header=False).decode('ascii').strip()


def parseGraph6Lines(text):
    """One graph per nonblank line; errors carry the 1-based line number."""
    graphs = []
    for number, rawLine in enumerate((text or '').splitlines(), start=1):
        if rawLine.strip():
            graphs.append(parseGraph6(rawLine, line=number))
    logger.debug('event=graph6_family_read graphs=%s', len(graphs))
    return graphs


def isIndexToken(token):
    return token.isascii() and token.isdigit()


def parseEdgeList(text):
    """
    Accepts an optional 'n <order>' first line followed by 'u v' lines with 0-based endpoints.
    Blank lines and lines starting with '#' are ignored. Without a header the order is one
    more than the largest endpoint.
    """
    declaredOrder = None
    edges = []
    for number, rawLine in enumerate((text or '').splitlines(), start=1):
        tokens = rawLine.split()
        if not tokens or tokens[0].startswith('#'):
            continue

        if tokens[0] == 'n':
            if declaredOrder is not None or edges:
                raise GraphParseError('Order header must come before every edge', line=number)
            if len(tokens) != 2 or not isIndexToken(tokens[1]):
                raise GraphParseError('Order header must read "n <order>"', line=number)
            declaredOrder = int(tokens[1])
            cap = vertexCap()
            if declaredOrder > cap:
                raise VertexCapExceeded(declaredOrder, cap)
            continue

        if len(tokens) != 2 or not all(isIndexToken(token) for token in tokens):
            raise GraphParseError(f'Expected "u v" with two vertex indices, got {rawLine.strip()!r}', line=number)

        u, v = int(tokens[0]), int(tokens[1])
        if u == v:
            raise GraphParseError(f'Self-loop on vertex {u}', line=number)
        if declaredOrder is not None and max(u, v) >= declaredOrder:
            raise GraphParseError(f'Edge {u}-{v} is outside 0..{declaredOrder - 1}', line=number)
        edges.append((u, v))

    order = declaredOrder
    if order is None:
        order = 1 + max((max(edge) for edge in edges), default=-1)
    return Graph.fromEdges(order, edges)


def writeEdgeList(g):
    lines = [f'n {g.order}'] + [f'{u} {v}' for u, v in g.edges()]
    return '\n'.join(lines) + '\n'


def writeDot(g, highlight=None, name='G'):
    if highlight is not None and highlight.bits >> g.order:
        raise GraphArgumentError(f'Highlighted set {highlight.indices()} is not a subset of 0..{g.order - 1}')

    context = {
        'name': name,
        'vertices': [
            {'index': vertex, 'highlighted': highlight is not None and vertex in highlight}
            for vertex in range(g.order)
        ],
        'edges': g.edges(),
    }
    return render_to_string(DOT_TEMPLATE, context)
