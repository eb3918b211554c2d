from parameterized import parameterized

from graphs import generators
from graphs.exceptions import GraphArgumentError, GraphParseError
from partialdom.tests.BaseTest import BaseTest


class GeneratorsTest(BaseTest):

    def testPath(self):
        g = generators.path(4)
        self.assertEqual(g.edges(), [(0, 1), (1, 2), (2, 3)])

    def testCycle(self):
        g = generators.cycle(5)
        self.assertEqual(g.degrees(), [2] * 5)
        self.assertTrue(g.isConnected())

    def testComplete(self):
        self.assertEqual(generators.complete(5).edgeCount(), 10)

    def testCompleteBipartiteSides(self):
        g = generators.completeBipartite(4, 2)
        self.assertEqual(g.degrees(), [2, 2, 2, 2, 4, 4])
        self.assertVertexSet(g.neighbors(0), [4, 5])

    def testStar(self):
        g = generators.star(6)
        self.assertEqual(g.order, 7)
        self.assertEqual(g.maxDegree(), 6)
        self.assertEqual(g.minDegree(), 1)

    def testSubdividedStar(self):
        g = generators.subdividedStar(8)
        self.assertEqual(g.order, 17)
        self.assertEqual(g.edgeCount(), 16)
        self.assertEqual(g.degree(0), 8)
        self.assertVertexSet(g.neighbors(3), [0, 11])
        self.assertVertexSet(g.closedNeighborhood(0), range(9))

    def testHubPairGraph(self):
        g = generators.hubPairGraph()
        self.assertEqual(g.order, 9)
        self.assertEqual(g.degrees(), [4, 2, 2, 2, 2, 3, 3, 1, 1])

    def testPendantWheelGraph(self):
        g = generators.pendantWheelGraph()
        self.assertEqual(g.order, 9)
        self.assertEqual(g.degrees(), [4, 4, 4, 4, 4, 1, 1, 1, 1])
        self.assertVertexSet(g.neighbors(0), [1, 2, 3, 4])

    def testTwinBroomTree(self):
        g = generators.twinBroomTree()
        self.assertEqual(g.order, 11)
        self.assertEqual(g.edgeCount(), 10)
        self.assertTrue(g.isConnected())
        self.assertVertexSet(g.maxDegreeVertices(), [0, 2, 3])

    @parameterized.expand([
        ('path:6', 6, 5),
        ('cycle:5', 5, 5),
        ('complete:4', 4, 6),
        ('complete-bipartite:4,2', 6, 8),
        ('star:6', 7, 6),
        ('subdivided-star:8', 17, 16),
        ('hub-pair', 9, 10),
        ('pendant-wheel', 9, 12),
        ('twin-broom', 11, 10),
        (' path:3 ', 3, 2),
        ('fig2', 9, 10),
        ('fig3', 9, 12),
        ('fig4', 11, 10),
    ])
    def testFromSpec(self, text, order, edgeCount):
        g = generators.fromSpec(text)
        self.assertEqual(g.order, order)
        self.assertEqual(g.edgeCount(), edgeCount)

    @parameterized.expand([
        'wheel:5',
        'path',
        'path:x',
        'path:-1',
        'complete-bipartite:4',
        'hub-pair:3',
        'path:\u00b2',
        'complete-bipartite:4,\u00b3',
        '',
    ])
    def testFromSpecRejectsMalformedSpec(self, text):
        with self.assertRaises(GraphParseError):
            generators.fromSpec(text)

    @parameterized.expand([
        'path:0',
        'cycle:2',
        'complete:0',
        'complete-bipartite:0,3',
        'star:0',
        'subdivided-star:0',
    ])
    def testFromSpecRejectsIllegalSizes(self, text):
        with self.assertRaises(GraphArgumentError):
            generators.fromSpec(text)
