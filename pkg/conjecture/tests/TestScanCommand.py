import tempfile
from pathlib import Path

from partialdom.tests.BaseTest import BaseTest


class ScanCommandTest(BaseTest):

    def testScanConnectedGraphs(self):
        output = self.callCommand('scan', '--max-order', '4')
        self.assertEqual(output, 'pairs=55, failures=0\n')

    def testScanSmallFamily(self):
        output = self.callCommand('scan', '--max-order', '2', '--p', '1/1')
        self.assertEqual(output, 'pairs=3, failures=0\n')

    def testScanRecords(self):
        output = self.callCommand('scan', '--max-order', '2', '--format', 'records')
        self.assertEqual(output.splitlines(), [
            '# g6_g\tg6_h\tp\tgp_g\tgp_h\tgp_prod\tholds\twitness\tregime',
            '# pairs=3, failures=0',
        ])

    def testScanGraphsFile(self):
        with tempfile.TemporaryDirectory() as directory:
            graphsFile = Path(directory) / 'family.g6'
            graphsFile.write_text('Cr\nD?{\n')
            output = self.callCommand('scan', '--graphs', str(graphsFile))
        self.assertEqual(output, 'pairs=3, failures=0\n')

    def testScanNeedsExactlyOneFamily(self):
        self.assertEqual(self.callFailingCommand('scan').returncode, 2)
        error = self.callFailingCommand('scan', '--max-order', '2', '--graphs', '/nonexistent.g6')
        self.assertEqual(error.returncode, 2)

    def testScanRejectsDisconnectedFlagWithGraphsFile(self):
        error = self.callFailingCommand('scan', '--graphs', '/nonexistent.g6', '--include-disconnected')
        self.assertEqual(error.returncode, 2)

    def testScanOverVertexCapExitsWithThree(self):
        self.assertEqual(self.callFailingCommand('scan', '--max-order', '9').returncode, 3)

    def testScanBeyondEnumerationLimitExitsWithTwo(self):
        self.assertEqual(self.callFailingCommand('scan', '--max-order', '8').returncode, 2)
