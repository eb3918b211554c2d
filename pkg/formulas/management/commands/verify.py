from django.core.management.base import CommandError
from django.db import models
from django.utils.translation import gettext_lazy as _

from conjecture.verification import DISCONNECTED_SUITES, PRODUCT_SUITES
from formulas.verification import FORMULA_SUITES, INFLUENCE_LEMMA_SUITES
from locating.verification import LOCATING_SUITES
from partialdom.base.BaseGraphCommand import BaseGraphCommand, OutputFormat, ReturnCode


class Command(BaseGraphCommand):
    help = 'Run the solver-against-formula and lemma suites and report every discrepancy.'
    graphInputs = 0
    usesProportion = False

    class Suite(models.TextChoices):
        FORMULAS = 'formulas', _('Closed forms, witnesses and influence characterisations')
        INFLUENCE = 'influence', _('Influencing-set lemmas over enumerated graphs')
        LOCATING = 'locating', _('Maximum-degree locating lemmas and greedy validity')
        PRODUCTS = 'products', _('Product and order bounds')
        ALL = 'all', _('Every suite')

    SUITES = {
        Suite.FORMULAS: FORMULA_SUITES,
        Suite.INFLUENCE: INFLUENCE_LEMMA_SUITES,
        Suite.LOCATING: LOCATING_SUITES,
        Suite.PRODUCTS: PRODUCT_SUITES,
    }

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--suite', choices=Command.Suite.values, default=Command.Suite.ALL)
        parser.add_argument(
            '--max-order',
            type=int,
            dest='maxOrder',
            help='Largest enumerated graph order for the graph-family suites.',
        )
        parser.add_argument(
            '--include-disconnected',
            action='store_true',
            dest='includeDisconnected',
            help='Let the order-bound suite enumerate disconnected graphs as well.',
        )

    def run(self, config, **options):
        selected = options['suite']
        groups = [
            (suite, functions)
            for suite, functions in Command.SUITES.items()
            if selected in (Command.Suite.ALL, suite)
        ]

        discrepancies = []
        suiteCount = 0
        for suite, functions in groups:
            for function in functions:
                kwargs = {}
                if suite != Command.Suite.FORMULAS and options.get('maxOrder') is not None:
                    kwargs['maxOrder'] = options['maxOrder']
                if options.get('includeDisconnected') and function in DISCONNECTED_SUITES:
                    kwargs['includeDisconnected'] = True
                found = function(**kwargs)
                suiteCount += 1
                self.stderr.write(self.style.NOTICE(f'{function.__name__}: {len(found)} discrepancies'))
                discrepancies += found

        if config.outputFormat == OutputFormat.RECORDS:
            self.writeRecords(
                ('suite', 'subject', 'expected', 'actual'),
                [(item.suite, item.subject, item.expected, item.actual) for item in discrepancies],
            )
        else:
            for item in discrepancies:
                self.stdout.write(self.style.ERROR(str(item)))
        self.stdout.write(f'suites={suiteCount}, discrepancies={len(discrepancies)}')

        if discrepancies:
            raise CommandError(f'{len(discrepancies)} discrepancies found', returncode=ReturnCode.FAILURES_FOUND)
