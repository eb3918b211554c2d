from domination.influence import influenceProfile, influencingIntersection, influencingSet
from graphs.exceptions import GraphArgumentError
from partialdom.base.BaseGraphCommand import BaseGraphCommand, OutputFormat


class Command(BaseGraphCommand):
    help = 'Print p-influencing sets: for one p, or for every p = k/n with their intersection.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            '--all-p',
            action='store_true',
            dest='allP',
            help='Sweep p = k/n for k = 1..n and print the intersection of all influencing sets.',
        )

    def run(self, config, **options):
        g, = config.graphs()
        if options['allP']:
            if config.p is not None:
                raise GraphArgumentError('Give either --p or --all-p, not both')
            self.writeProfile(g, config)
            return

        members = influencingSet(g, self.requireProportion(config))
        if config.outputFormat == OutputFormat.RECORDS:
            self.writeRecords(('kind', 'p', 'members'), [('influencing', config.p, members.record())])
        else:
            self.writeTable([('influencing_set', members.label())])

    def writeProfile(self, g, config):
        profile = influenceProfile(g)
        intersection = influencingIntersection(g, profile)

        if config.outputFormat == OutputFormat.RECORDS:
            rows = [('influencing', step.label(), step.members.record()) for step in profile]
            rows.append(('intersection', '*', intersection.record()))
            self.writeRecords(('kind', 'p', 'members'), rows)
        else:
            rows = [(f'influencing_set[{step.label()}]', step.members.label()) for step in profile]
            rows.append(('intersection', intersection.label()))
            self.writeTable(rows)
