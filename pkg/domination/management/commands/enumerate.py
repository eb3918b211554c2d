from domination.solver import allGammaPSets
from partialdom.base.BaseGraphCommand import BaseGraphCommand, OutputFormat


class Command(BaseGraphCommand):
    help = 'List every minimum p-dominating set, one per line, in lexicographic order.'

    def run(self, config, **options):
        g, = config.graphs()
        family = allGammaPSets(g, self.requireProportion(config))

        if config.outputFormat == OutputFormat.RECORDS:
            self.writeRecords(('size', 'members'), [(family.size, member.record()) for member in family])
        else:
            for member in family:
                self.stdout.write(member.label())
