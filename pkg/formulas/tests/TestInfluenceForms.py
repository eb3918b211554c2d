from parameterized import parameterized

from formulas.influence import (
    BipartiteInfluenceSpec,
    PathInfluenceSpec,
    influencingCompleteBipartite,
    influencingFullThreshold,
    influencingIntersectionCompleteBipartite,
    influencingIntersectionPath,
    influencingPath,
)
from graphs.exceptions import GraphArgumentError
from graphs.generators import pendantWheelGraph, path
from graphs.structures import Graph, Proportion
from partialdom.tests.BaseTest import BaseTest


class InfluenceFormsTest(BaseTest):

    @parameterized.expand([
        ('low', Proportion(1, 6), BipartiteInfluenceSpec.Sides.BOTH, range(6)),
        ('second-side', Proportion(4, 6), BipartiteInfluenceSpec.Sides.SECOND, [4, 5]),
        ('upper-edge', Proportion(5, 6), BipartiteInfluenceSpec.Sides.SECOND, [4, 5]),
        ('full', Proportion(1, 1), BipartiteInfluenceSpec.Sides.BOTH, range(6)),
    ])
    def testInfluencingCompleteBipartite(self, name, p, sides, members):
        spec = influencingCompleteBipartite(4, 2, p)
        self.assertEqual(spec.sides, sides)
        self.assertVertexSet(spec.members, members)

    def testBalancedCompleteBipartiteIsAlwaysBothSides(self):
        for k in range(1, 7):
            spec = influencingCompleteBipartite(3, 3, Proportion(k, 6))
            self.assertEqual(spec.sides, BipartiteInfluenceSpec.Sides.BOTH)

    def testInfluencingCompleteBipartiteRejectsSwappedSides(self):
        with self.assertRaises(GraphArgumentError):
            influencingCompleteBipartite(2, 4, Proportion(1, 2))

    def testInfluencingCompleteBipartiteRejectsZero(self):
        with self.assertRaises(GraphArgumentError):
            influencingCompleteBipartite(4, 2, Proportion(0, 1))

    def testInfluencingIntersectionCompleteBipartite(self):
        self.assertVertexSet(influencingIntersectionCompleteBipartite(4, 2), [4, 5])
        self.assertVertexSet(influencingIntersectionCompleteBipartite(3, 3), range(6))

    @parameterized.expand([
        (6, 1, PathInfluenceSpec.Case.ALL, range(6)),
        (6, 3, PathInfluenceSpec.Case.INTERIOR, [1, 2, 3, 4]),
        (6, 6, PathInfluenceSpec.Case.PERFECT_CODE, [1, 4]),
        (7, 6, PathInfluenceSpec.Case.WITHOUT_CLASS_ONE, [1, 2, 4, 5]),
        (4, 3, PathInfluenceSpec.Case.WITHOUT_CLASS_ONE, [1, 2]),
        (4, 4, PathInfluenceSpec.Case.ALL, range(4)),
        (5, 2, PathInfluenceSpec.Case.ALL, range(5)),
        (5, 3, PathInfluenceSpec.Case.INTERIOR, [1, 2, 3]),
        (5, 5, PathInfluenceSpec.Case.WITHOUT_CLASS_THREE, [0, 1, 3, 4]),
    ])
    def testInfluencingPath(self, n, j, case, members):
        spec = influencingPath(n, Proportion(j, n))
        self.assertEqual(spec.residue, n % 3)
        self.assertEqual(spec.case, case)
        self.assertVertexSet(spec.members, members)

    def testInfluencingPathRejectsShortPath(self):
        with self.assertRaises(GraphArgumentError):
            influencingPath(1, Proportion(1, 1))

    @parameterized.expand([
        (4, [1, 2]),
        (5, [1, 3]),
        (6, [1, 4]),
        (7, [1, 2, 4, 5]),
    ])
    def testInfluencingIntersectionPath(self, n, members):
        self.assertVertexSet(influencingIntersectionPath(n), members)

    def testInfluencingIntersectionPathRejectsShortPath(self):
        with self.assertRaises(GraphArgumentError):
            influencingIntersectionPath(2)

    def testInfluencingFullThreshold(self):
        self.assertEqual(influencingFullThreshold(pendantWheelGraph()), Proportion(2, 9))
        self.assertEqual(influencingFullThreshold(path(4)), Proportion(1, 2))

    def testInfluencingFullThresholdRejectsEmptyGraph(self):
        with self.assertRaises(GraphArgumentError):
            influencingFullThreshold(Graph(0, ()))
