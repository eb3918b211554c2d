from graphs.formats import writeDot, writeEdgeList, writeGraph6
from graphs.structures import cartesianProduct
from partialdom.base.BaseGraphCommand import BaseGraphCommand, OutputFormat


class Command(BaseGraphCommand):
    help = 'Write the Cartesian product G□H, vertex (a, b) at index a * |H| + b.'
    graphInputs = 2
    usesProportion = False
    outputFormats = (OutputFormat.GRAPH6, OutputFormat.DOT, OutputFormat.EDGE_LIST)

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--dot', action='store_true', help='Shorthand for --format dot.')

    def run(self, config, **options):
        g, h = config.graphs()
        product = cartesianProduct(g, h)

        outputFormat = OutputFormat.DOT if options['dot'] else config.outputFormat
        if outputFormat == OutputFormat.DOT:
            self.stdout.write(writeDot(product, name='product'), ending='')
        elif outputFormat == OutputFormat.EDGE_LIST:
            self.stdout.write(writeEdgeList(product), ending='')
        else:
            self.stdout.write(writeGraph6(product))
