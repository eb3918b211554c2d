from domination.influence import influenceProfile, influencingIntersection, influencingSet
from domination.tests.bruteForce import bruteGammaPSets
from graphs.exceptions import GraphArgumentError
from graphs.generators import complete, hubPairGraph, path, pendantWheelGraph, twinBroomTree
from graphs.structures import Graph, Proportion
from partialdom.operations import bakerOperations
from partialdom.tests.BaseTest import BaseTest


class InfluenceTest(BaseTest):

    def testInfluencingSetOfHubPairGraph(self):
        g = hubPairGraph()
        self.assertVertexSet(influencingSet(g, Proportion(4, 9)), [0, 5, 6])
        self.assertVertexSet(influencingSet(g, Proportion(5, 9)), [0])
        self.assertVertexSet(influencingSet(g, Proportion(8, 9)), [5, 6])

    def testInfluencingSetOfPendantWheelSkipsHub(self):
        self.assertVertexSet(influencingSet(pendantWheelGraph(), Proportion(7, 9)), range(1, 9))

    def testInfluencingSetOfTwinBroomTree(self):
        self.assertVertexSet(influencingSet(twinBroomTree(), Proportion(5, 11)), [0, 2, 3])

    def testInfluencingSetAtZeroIsEmpty(self):
        self.assertVertexSet(influencingSet(complete(4), Proportion(0, 1)), [])

    def testInfluenceProfileSteps(self):
        profile = influenceProfile(hubPairGraph())
        self.assertEqual([step.label() for step in profile], [f'{k}/9' for k in range(1, 10)])
        self.assertEqual(profile[3].proportion, Proportion(4, 9))
        self.assertVertexSet(profile[3].members, [0, 5, 6])

    def testInfluencingIntersectionOfHubPairGraphIsEmpty(self):
        self.assertVertexSet(influencingIntersection(hubPairGraph()), [])

    def testInfluencingIntersectionReusesProfile(self):
        g = path(2)
        profile = influenceProfile(g)
        self.assertVertexSet(influencingIntersection(g, profile), [0, 1])

    def testInfluencingIntersectionOfCompleteGraphIsEverything(self):
        self.assertVertexSet(influencingIntersection(complete(5)), range(5))

    def testInfluenceProfileNeedsVertices(self):
        with self.assertRaises(GraphArgumentError):
            influenceProfile(Graph(0, ()))

    def testInfluencingSetMatchesBruteForceUnion(self):
        graphs = bakerOperations.createRandomGraphs(limit=40, maxOrder=7, seed=31)
        for g in graphs:
            for p in bakerOperations.createRandomProportions(limit=3, seed=g.order):
                _, expectedSets = bruteGammaPSets(g, p)
                expected = {vertex for subset in expectedSets for vertex in subset}
                self.assertVertexSet(influencingSet(g, p), expected)
