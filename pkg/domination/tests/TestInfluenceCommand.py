from partialdom.tests.BaseTest import BaseTest


class InfluenceCommandTest(BaseTest):

    def testInfluenceSingleProportion(self):
        output = self.callCommand('influence', '--gen', 'twin-broom', '--p', '5/11')
        self.assertEqual(output, 'influencing_set = {v_1, v_3, v_4}\n')

    def testInfluenceSingleProportionRecords(self):
        output = self.callCommand('influence', '--gen', 'hub-pair', '--p', '4/9', '--format', 'records')
        self.assertEqual(output, '# kind\tp\tmembers\ninfluencing\t4/9\t0,5,6\n')

    def testInfluenceProfileOfHubPairGraph(self):
        output = self.callCommand('influence', '--gen', 'hub-pair', '--all-p')
        fields = self.outputFields(output)
        self.assertEqual(len(fields), 10)
        self.assertEqual(fields['influencing_set[4/9]'], '{v_1, v_6, v_7}')
        self.assertEqual(fields['influencing_set[5/9]'], '{v_1}')
        self.assertEqual(fields['influencing_set[8/9]'], '{v_6, v_7}')
        self.assertEqual(fields['intersection'], '{}')
        self.assertTrue(output.splitlines()[-1].startswith('intersection = '))

    def testInfluenceProfileRecords(self):
        output = self.callCommand('influence', '--gen', 'path:2', '--all-p', '--format', 'records')
        self.assertEqual(output.splitlines(), [
            '# kind\tp\tmembers',
            'influencing\t1/2\t0,1',
            'influencing\t2/2\t0,1',
            'intersection\t*\t0,1',
        ])

    def testInfluenceRejectsBothModes(self):
        error = self.callFailingCommand('influence', '--gen', 'path:3', '--p', '1/2', '--all-p')
        self.assertEqual(error.returncode, 2)

    def testInfluenceNeedsProportionOrSweep(self):
        error = self.callFailingCommand('influence', '--gen', 'path:3')
        self.assertEqual(error.returncode, 2)

    def testInfluencePerfectCodeOfSixPath(self):
        output = self.callCommand('influence', '--gen', 'path:6', '--p', '1/1')
        self.assertEqual(output, 'influencing_set = {v_2, v_5}\n')

    def testInfluenceIntersectionOfCompleteBipartiteIsSecondSide(self):
        output = self.callCommand('influence', '--gen', 'complete-bipartite:4,2', '--all-p')
        self.assertEqual(output.splitlines()[-1], 'intersection = {v_5, v_6}')

    def testInfluenceFig2ProfileHasEmptyIntersection(self):
        output = self.callCommand('influence', '--gen', 'fig2', '--all-p')
        self.assertEqual(output.splitlines()[-1], 'intersection = {}')
        self.assertEqual(output, self.callCommand('influence', '--gen', 'hub-pair', '--all-p'))
