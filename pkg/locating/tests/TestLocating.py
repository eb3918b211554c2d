from graphs.choices import Verdict
from graphs.exceptions import GraphArgumentError
from graphs.generators import hubPairGraph, pendantWheelGraph, twinBroomTree
from graphs.structures import Proportion
from locating import verification
from locating.locating import greedyGap, greedyHighDegree, maxDegreeLocationVerdict, secondNeighborhoodCheck
from partialdom.tests.BaseTest import BaseTest


class LocatingTest(BaseTest):

    def verdictCases(self, verdict):
        return verdict.containsVertex, verdict.containsNeighbor, verdict.containsDistanceTwo

    def testHubPairApexIsOnlyReachedAtDistanceTwo(self):
        verdict = maxDegreeLocationVerdict(hubPairGraph(), Proportion(8, 9), 0)
        self.assertEqual(self.verdictCases(verdict), (False, False, True))
        self.assertEqual(verdict.familySize, 1)
        self.assertTrue(verdict.anyCase)

    def testPendantWheelHub(self):
        verdict = maxDegreeLocationVerdict(pendantWheelGraph(), Proportion(7, 9), 0)
        self.assertEqual(self.verdictCases(verdict), (False, True, True))
        self.assertEqual(verdict.familySize, 10)

    def testTwinBroomRoot(self):
        verdict = maxDegreeLocationVerdict(twinBroomTree(), Proportion(9, 11), 0)
        self.assertEqual(self.verdictCases(verdict), (False, True, False))

    def testLocationVerdictAtZeroWarns(self):
        with self.assertLogs('locating.locating', level='WARNING'):
            verdict = maxDegreeLocationVerdict(twinBroomTree(), Proportion(0, 1), 0)
        self.assertFalse(verdict.anyCase)
        self.assertEqual(verdict.familySize, 1)

    def testLocationVerdictRejectsLowDegreeVertex(self):
        with self.assertRaises(GraphArgumentError):
            maxDegreeLocationVerdict(hubPairGraph(), Proportion(1, 2), 1)

    def testSecondNeighborhoodHolds(self):
        self.assertEqual(secondNeighborhoodCheck(hubPairGraph(), Proportion(8, 9), 0), Verdict.HOLDS)
        self.assertEqual(secondNeighborhoodCheck(pendantWheelGraph(), Proportion(7, 9), 0), Verdict.HOLDS)
        self.assertEqual(secondNeighborhoodCheck(twinBroomTree(), Proportion(9, 11), 0), Verdict.HOLDS)

    def testSecondNeighborhoodNotApplicableWhenVertexIsChosen(self):
        self.assertEqual(secondNeighborhoodCheck(pendantWheelGraph(), Proportion(7, 9), 1), Verdict.NOT_APPLICABLE)
        self.assertEqual(secondNeighborhoodCheck(twinBroomTree(), Proportion(5, 11), 0), Verdict.NOT_APPLICABLE)

    def testSecondNeighborhoodRejectsLowDegreeVertex(self):
        with self.assertRaises(GraphArgumentError):
            secondNeighborhoodCheck(twinBroomTree(), Proportion(1, 2), 1)

    def testGreedyHighDegree(self):
        self.assertVertexSet(greedyHighDegree(hubPairGraph(), Proportion(8, 9)), [0, 5, 6])
        self.assertVertexSet(greedyHighDegree(twinBroomTree(), Proportion(5, 11)), [0])

    def testGreedyGap(self):
        self.assertEqual(greedyGap(hubPairGraph(), Proportion(8, 9)), 1)
        self.assertEqual(greedyGap(twinBroomTree(), Proportion(5, 11)), 0)

    def testLocatingSuitesOnEnumeratedGraphs(self):
        self.assertEqual(verification.verifyMaxDegreeLocation(maxOrder=6), [])
        self.assertEqual(verification.verifySecondNeighborhood(maxOrder=6), [])
        self.assertEqual(verification.verifyGreedyValidity(maxOrder=7), [])

    def testLocatingSuitesOnSuppliedGraphs(self):
        graphs = [hubPairGraph(), pendantWheelGraph(), twinBroomTree()]
        self.assertEqual(verification.verifyMaxDegreeLocation(graphs=graphs), [])
        self.assertEqual(verification.verifySecondNeighborhood(graphs=graphs), [])

    def testPositiveProportions(self):
        self.assertEqual(
            verification.positiveProportions(twinBroomTree())[:2],
            [Proportion(1, 11), Proportion(2, 11)],
        )
