from django.core.management.base import CommandError

from conjecture.scan import RECORD_FIELDS, scanConjecture, scanFamily
from graphs.choices import Regime
from graphs.exceptions import GraphArgumentError
from graphs.formats import parseGraph6Lines
from partialdom.base.BaseGraphCommand import BaseGraphCommand, OutputFormat, ReturnCode, readInputFile


class Command(BaseGraphCommand):
    help = 'Check gamma_p(G□H) >= gamma_p(G) * gamma_p(H) over every pair of a graph family.'
    graphInputs = 0
    defaultProportion = '1/2'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--max-order', type=int, dest='maxOrder', help='Scan all connected graphs up to this order.')
        parser.add_argument(
            '--include-disconnected',
            action='store_true',
            dest='includeDisconnected',
            help='Enumerate disconnected graphs as well.',
        )
        parser.add_argument('--graphs', dest='graphsFile', help='Scan the graphs of a graph6 file, one per line.')
        parser.add_argument('--workers', type=int, help='Worker processes for product solves (default SCAN_WORKERS).')

    def run(self, config, **options):
        p = self.requireProportion(config)
        maxOrder, graphsFile = options.get('maxOrder'), options.get('graphsFile')
        if (maxOrder is None) == (graphsFile is None):
            raise GraphArgumentError('Give exactly one of --max-order, --graphs')

        if graphsFile is not None:
            if options.get('includeDisconnected'):
                raise GraphArgumentError('--include-disconnected only applies to --max-order')
            family = parseGraph6Lines(readInputFile(graphsFile))
            summary = scanFamily(family, p, Regime.SUPPLIED, options.get('workers'))
        else:
            summary = scanConjecture(maxOrder, p, options.get('includeDisconnected'), options.get('workers'))

        if config.outputFormat == OutputFormat.RECORDS:
            self.writeRecords(RECORD_FIELDS, [])
            for report in summary.failures:
                self.stdout.write(report.record())
            self.stdout.write(f'# {summary.line()}')
        else:
            for report in summary.failures:
                self.stdout.write(self.style.ERROR(
                    f'failure = {report.g6G} x {report.g6H}: gp_g={report.gpG} gp_h={report.gpH} '
                    f'gp_prod={report.gpProduct} witness={report.witness.label()} regime={report.regime}'
                ))
            self.stdout.write(summary.line())

        if summary.failures:
            raise CommandError(
                f'{len(summary.failures)} pair(s) violate the product inequality',
                returncode=ReturnCode.FAILURES_FOUND,
            )
