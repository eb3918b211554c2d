from domination.solver import coverage, coverageTarget, gammaP
from graphs.formats import writeDot
from partialdom.base.BaseGraphCommand import BaseGraphCommand, OutputFormat


class Command(BaseGraphCommand):
    help = 'Compute gamma_p of a graph with its lexicographically smallest optimal witness.'
    outputFormats = (OutputFormat.TABLE, OutputFormat.RECORDS, OutputFormat.DOT)

    def run(self, config, **options):
        g, = config.graphs()
        p = self.requireProportion(config)
        result = gammaP(g, p)
        covered = coverage(g, result.witness)
        target = coverageTarget(g.order, p)

        if config.outputFormat == OutputFormat.DOT:
            self.stdout.write(writeDot(g, result.witness), ending='')
        elif config.outputFormat == OutputFormat.RECORDS:
            self.writeRecords(
                ('order', 'p', 'gamma_p', 'witness', 'coverage', 'target'),
                [(g.order, p, result.gammaP, result.witness.record(), covered, target)],
            )
        else:
            self.writeTable([
                ('order', g.order),
                ('p', p),
                ('gamma_p', result.gammaP),
                ('witness', result.witness.label()),
                ('coverage', f'{covered}/{g.order} (target {target})'),
            ])
