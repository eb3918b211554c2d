import logging
from dataclasses import dataclass
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError
from django.db import models
from django.utils.translation import gettext_lazy as _

from graphs import formats, generators
from graphs.exceptions import GraphArgumentError, GraphParseError, VertexCapExceeded
from graphs.structures import Proportion

logger = logging.getLogger(__name__)

GRAPH6_SUFFIXES = ('.g6', '.graph6')


class ReturnCode:
    OK = 0
    FAILURES_FOUND = 1
    PARSE_ERROR = 2
    VERTEX_CAP = 3


class OutputFormat(models.TextChoices):
    TABLE = 'table', _('Human readable key = value table')
    RECORDS = 'records', _('Tab separated records under a # header')
    DOT = 'dot', _('Graphviz DOT')
    GRAPH6 = 'graph6', _('One graph6 line')
    EDGE_LIST = 'edges', _('Edge list with an n <order> header')


@dataclass(frozen=True)
class GraphSource:
    """Where one input graph comes from: a generator spec, an inline graph6 string or a file."""

    class Kind(models.TextChoices):
        GENERATOR = 'gen', _('Generator spec')
        GRAPH6 = 'graph6', _('Inline graph6')
        FILE = 'file', _('graph6 or edge-list file')

    kind: str
    value: str

    def load(self):
        if self.kind == GraphSource.Kind.GENERATOR:
            return generators.fromSpec(self.value)
        if self.kind == GraphSource.Kind.GRAPH6:
            return formats.parseGraph6(self.value)

        text = readInputFile(self.value)
        if Path(self.value).suffix.lower() in GRAPH6_SUFFIXES:
            graphs = formats.parseGraph6Lines(text)
            if len(graphs) != 1:
                raise GraphParseError(f'{self.value} holds {len(graphs)} graphs, expected exactly one')
            return graphs[0]
        return formats.parseEdgeList(text)


@dataclass(frozen=True)
class RunConfig:
    command: str
    sources: tuple
    p: Proportion | None
    outputFormat: str

    def graphs(self):
        return [source.load() for source in self.sources]


def readInputFile(path):
    try:
        return Path(path).read_text(encoding='ascii')
    except (OSError, UnicodeDecodeError) as error:
        raise GraphParseError(f'Cannot read {path}: {error}')


class BaseGraphCommand(BaseCommand):
    # number of graph inputs; the second one takes --gen2 / --graph62 / --file2
    graphInputs = 1
    usesProportion = True
    defaultProportion = None
    outputFormats = (OutputFormat.TABLE, OutputFormat.RECORDS)

    def add_arguments(self, parser):
        for position in range(1, self.graphInputs + 1):
            self.addGraphSourceArguments(parser, '' if position == 1 else str(position))

        if self.usesProportion:
            parser.add_argument(
                '--p',
                default=self.defaultProportion,
                help='Proportion as an exact fraction num/den, for example 1/2.',
            )
        parser.add_argument(
            '--format',
            dest='outputFormat',
            choices=[choice.value for choice in self.outputFormats],
            default=self.outputFormats[0].value,
            help='Output format.',
        )

    def addGraphSourceArguments(self, parser, suffix):
        group = parser.add_mutually_exclusive_group(required=True)
        group.add_argument(f'--gen{suffix}', help='Generator spec such as path:6 or complete-bipartite:4,2.')
        group.add_argument(f'--graph6{suffix}', help='Inline graph6 string.')
        group.add_argument(f'--file{suffix}', help='graph6 (.g6) or edge-list file.')

    def run(self, config, **options):
        """Override this method in subclasses."""
        raise NotImplementedError('Subclasses must implement run method')

    def handle(self, *args, **options):
        try:
            config = self.buildConfig(options)
            logger.debug('event=command_started command=%s sources=%s p=%s format=%s', config.command, config.sources, config.p, config.outputFormat)
            self.run(config, **options)
        except VertexCapExceeded as error:
            raise CommandError(str(error), returncode=ReturnCode.VERTEX_CAP)
        except (GraphParseError, GraphArgumentError) as error:
            raise CommandError(str(error), returncode=ReturnCode.PARSE_ERROR)

    def buildConfig(self, options):
        sources = []
        for position in range(1, self.graphInputs + 1):
            suffix = '' if position == 1 else str(position)
            sources.append(self.graphSource(options, suffix))

        rawProportion = options.get('p')
        return RunConfig(
            command=self.__module__.rsplit('.', 1)[-1],
            sources=tuple(sources),
            p=Proportion.parse(rawProportion) if rawProportion is not None else None,
            outputFormat=options.get('outputFormat') or self.outputFormats[0].value,
        )

    def graphSource(self, options, suffix):
        chosen = [
            GraphSource(kind, options[f'{kind}{suffix}'])
            for kind in GraphSource.Kind.values
            if options.get(f'{kind}{suffix}') is not None
        ]
        if len(chosen) != 1:
            flags = ', '.join(f'--{kind}{suffix}' for kind in GraphSource.Kind.values)
            raise GraphArgumentError(f'Give exactly one of {flags}')
        return chosen[0]

    def requireProportion(self, config):
        if config.p is None:
            raise GraphArgumentError('--p num/den is required')
        return config.p

    def writeTable(self, rows):
        for key, value in rows:
            self.stdout.write(f'{key} = {value}')

    def writeRecords(self, fields, rows):
        self.stdout.write('# ' + '\t'.join(fields))
        for row in rows:
            self.stdout.write('\t'.join(str(value) for value in row))
