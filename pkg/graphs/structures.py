import functools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from django.conf import settings

from graphs.exceptions import GraphArgumentError, GraphParseError, VertexCapExceeded

DEFAULT_VERTEX_CAP = 64
PROPORTION_PATTERN = re.compile(r'^\s*(\d+)\s*/\s*(\d+)\s*$', re.ASCII)


def vertexCap():
    if settings.configured:
        return getattr(settings, 'VERTEX_CAP', DEFAULT_VERTEX_CAP)
    return DEFAULT_VERTEX_CAP


def iterBits(mask):
    while mask:
        lowest = mask & -mask
        yield lowest.bit_length() - 1
        mask ^= lowest


@functools.total_ordering
@dataclass(frozen=True)
class Proportion:
    num: int
    den: int = 1

    def __post_init__(self):
        if self.den <= 0:
            raise GraphArgumentError(f'Proportion denominator must be positive, got {self.den}')
        if not 0 <= self.num <= self.den:
            raise GraphArgumentError(f'Proportion {self.num}/{self.den} is outside [0, 1]')

        divisor = math.gcd(self.num, self.den)
        object.__setattr__(self, 'num', self.num // divisor)
        object.__setattr__(self, 'den', self.den // divisor)

    @classmethod
    def parse(cls, text):
        match = PROPORTION_PATTERN.match(text or '')
        if match is None:
            raise GraphParseError(f'Proportion must be written as num/den, got {text!r}')

        numerator, denominator = int(match.group(1)), int(match.group(2))
        if denominator == 0:
            raise GraphParseError(f'Proportion {text!r} has a zero denominator', position=match.start(2))
        return cls(numerator, denominator)

    def asFraction(self):
        return Fraction(self.num, self.den)

    def isZero(self):
        return self.num == 0

    def __lt__(self, other):
        if not isinstance(other, Proportion):
            return NotImplemented
        return self.num * other.den < other.num * self.den

    def __str__(self):
        return f'{self.num}/{self.den}'


@dataclass(frozen=True)
class VertexSet:
    bits: int = 0
    order: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.order:
            raise GraphArgumentError(f'Vertex set {self.bits:#b} uses vertices outside 0..{self.order - 1}')

    @classmethod
    def fromIndices(cls, indices, order):
        bits = 0
        for index in indices:
            if not 0 <= index < order:
                raise GraphArgumentError(f'Vertex {index} is outside 0..{order - 1}')
            bits |= 1 << index
        return cls(bits, order)

    @classmethod
    def full(cls, order):
        return cls((1 << order) - 1, order)

    def __iter__(self):
        return iterBits(self.bits)

    def __len__(self):
        return self.bits.bit_count()

    def __contains__(self, vertex):
        return vertex >= 0 and bool(self.bits >> vertex & 1)

    def __or__(self, other):
        return VertexSet(self.bits | other.bits, max(self.order, other.order))

    def __and__(self, other):
        return VertexSet(self.bits & other.bits, max(self.order, other.order))

    def __sub__(self, other):
        return VertexSet(self.bits & ~other.bits, max(self.order, other.order))

    def isSubset(self, other):
        return self.bits & ~other.bits == 0

    def isDisjoint(self, other):
        return self.bits & other.bits == 0

    def indices(self):
        return tuple(self)

    def label(self):
        """Human form with 1-based labels, v_i for index i - 1."""
        return '{' + ', '.join(f'v_{index + 1}' for index in self) + '}'

    def record(self):
        return ','.join(str(index) for index in self)


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph on vertices 0..order-1; adjacency[v] is the bitset N(v).
    Instances are immutable and validated on construction.
    """
    order: int
    adjacency: tuple

    def __post_init__(self):
        if self.order < 0:
            raise GraphArgumentError(f'Graph order must be nonnegative, got {self.order}')

        cap = vertexCap()
        if self.order > cap:
            raise VertexCapExceeded(self.order, cap)

        if len(self.adjacency) != self.order:
            raise GraphArgumentError(f'Expected {self.order} adjacency rows, got {len(self.adjacency)}')

        for vertex, neighbors in enumerate(self.adjacency):
            if neighbors < 0 or neighbors >> self.order:
                raise GraphArgumentError(f'Vertex {vertex} has neighbors outside 0..{self.order - 1}')
            if neighbors >> vertex & 1:
                raise GraphArgumentError(f'Vertex {vertex} has a self-loop')
            for neighbor in iterBits(neighbors):
                if not self.adjacency[neighbor] >> vertex & 1:
                    raise GraphArgumentError(f'Edge {vertex}-{neighbor} is not symmetric')

    @classmethod
    def fromEdges(cls, order, edges):
        if order < 0:
            raise GraphArgumentError(f'Graph order must be nonnegative, got {order}')

        cap = vertexCap()
        if order > cap:
            raise VertexCapExceeded(order, cap)

        adjacency = [0] * order
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise GraphArgumentError(f'Edge {u}-{v} is outside 0..{order - 1}')
            if u == v:
                raise GraphArgumentError(f'Vertex {u} has a self-loop')
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u
        return cls(order, tuple(adjacency))

    @cached_property
    def closedMasks(self):
        return tuple(neighbors | 1 << vertex for vertex, neighbors in enumerate(self.adjacency))

    def checkVertex(self, vertex):
        if not isinstance(vertex, int) or not 0 <= vertex < self.order:
            raise GraphArgumentError(f'Vertex {vertex} is outside 0..{self.order - 1}')

    def vertices(self):
        return VertexSet.full(self.order)

    def neighbors(self, vertex):
        self.checkVertex(vertex)
        return VertexSet(self.adjacency[vertex], self.order)

    def closedNeighborhood(self, vertex):
        self.checkVertex(vertex)
        return VertexSet(self.closedMasks[vertex], self.order)

    def closedNeighborhoodOfSet(self, vertexSet):
        if vertexSet.bits >> self.order:
            raise GraphArgumentError(f'Vertex set {vertexSet.indices()} is not a subset of 0..{self.order - 1}')

        covered = 0
        for vertex in vertexSet:
            covered |= self.closedMasks[vertex]
        return VertexSet(covered, self.order)

    def distanceTwoNeighborhood(self, vertex):
        """N(N[v]): vertices at distance exactly two from the vertex."""
        closed = self.closedNeighborhood(vertex)
        reach = 0
        for member in closed:
            reach |= self.adjacency[member]
        return VertexSet(reach & ~closed.bits, self.order)

    def secondClosedNeighborhood(self, vertex):
        """N[N[v]]: vertices within distance two of the vertex."""
        return self.closedNeighborhoodOfSet(self.closedNeighborhood(vertex))

    def degree(self, vertex):
        self.checkVertex(vertex)
        return self.adjacency[vertex].bit_count()

    def degrees(self):
        return [neighbors.bit_count() for neighbors in self.adjacency]

    def maxDegree(self):
        if self.order == 0:
            raise GraphArgumentError('Maximum degree of the empty graph is undefined')
        return max(self.degrees())

    def minDegree(self):
        if self.order == 0:
            raise GraphArgumentError('Minimum degree of the empty graph is undefined')
        return min(self.degrees())

    def maxDegreeVertices(self):
        highest = self.maxDegree()
        return VertexSet.fromIndices(
            [vertex for vertex, degree in enumerate(self.degrees()) if degree == highest], self.order
        )

    def edges(self):
        return [
            (u, v)
            for u, neighbors in enumerate(self.adjacency)
            for v in iterBits(neighbors)
            if u < v
        ]

    def edgeCount(self):
        return sum(self.degrees()) // 2

    def isConnected(self):
        if self.order <= 1:
            return True

        seen = frontier = 1
        while frontier:
            reach = 0
            for vertex in iterBits(frontier):
                reach |= self.adjacency[vertex]
            frontier = reach & ~seen
            seen |= frontier
        return seen == (1 << self.order) - 1

    def relabel(self, permutation):
        """New vertex i is old vertex permutation[i]."""
        if sorted(permutation) != list(range(self.order)):
            raise GraphArgumentError(f'{permutation} is not a permutation of 0..{self.order - 1}')

        position = [0] * self.order
        for newIndex, oldIndex in enumerate(permutation):
            position[oldIndex] = newIndex

        adjacency = []
        for oldIndex in permutation:
            mask = 0
            for neighbor in iterBits(self.adjacency[oldIndex]):
                mask |= 1 << position[neighbor]
            adjacency.append(mask)
        return Graph(self.order, tuple(adjacency))


def cartesianProduct(g, h):
    """G□H with vertex (a, b) stored at index a * |H| + b."""
    if g.order == 0 or h.order == 0:
        raise GraphArgumentError('Cartesian product needs two nonempty factors')

    order = g.order * h.order
    cap = vertexCap()
    if order > cap:
        raise VertexCapExceeded(order, cap)

    width = h.order
    adjacency = []
    for a in range(g.order):
        for b in range(h.order):
            mask = h.adjacency[b] << (a * width)
            for c in iterBits(g.adjacency[a]):
                mask |= 1 << (c * width + b)
            adjacency.append(mask)
    return Graph(order, tuple(adjacency))
