from dataclasses import dataclass

from django.db import models
from django.utils.translation import gettext_lazy as _

from domination.solver import coverageTarget
from graphs.exceptions import GraphArgumentError
from graphs.structures import Proportion, VertexSet


@dataclass(frozen=True)
class BipartiteInfluenceSpec:

    class Sides(models.TextChoices):
        BOTH = 'BOTH', _('V_1 ∪ V_2')
        SECOND = 'SECOND', _('V_2')

    sides: str
    members: VertexSet


@dataclass(frozen=True)
class PathInfluenceSpec:

    class Case(models.TextChoices):
        ALL = 'ALL', _('Every vertex')
        INTERIOR = 'INTERIOR', _('Every vertex except the two ends')
        PERFECT_CODE = 'PERFECT_CODE', _('v_2, v_5, v_8, ...')
        WITHOUT_CLASS_ONE = 'WITHOUT_CLASS_ONE', _('Every vertex except v_1, v_4, v_7, ...')
        WITHOUT_CLASS_THREE = 'WITHOUT_CLASS_THREE', _('Every vertex except v_3, v_6, v_9, ...')

    residue: int
    case: str
    members: VertexSet


def requirePositiveProportion(p):
    if p.isZero():
        raise GraphArgumentError('Influencing set characterisations need p > 0')


def influencingCompleteBipartite(m, n, p):
    """K_{m,n} with m >= n >= 1; side V_1 is 0..m-1 and V_2 is m..m+n-1."""
    if not (isinstance(m, int) and isinstance(n, int) and m >= n >= 1):
        raise GraphArgumentError(f'K_(m,n) characterisation needs m >= n >= 1, got m={m}, n={n}')
    requirePositiveProportion(p)

    k = coverageTarget(m + n, p)
    if m > n and n + 2 <= k <= m + 1:
        return BipartiteInfluenceSpec(BipartiteInfluenceSpec.Sides.SECOND, VertexSet.fromIndices(range(m, m + n), m + n))
    return BipartiteInfluenceSpec(BipartiteInfluenceSpec.Sides.BOTH, VertexSet.full(m + n))


def influencingIntersectionCompleteBipartite(m, n):
    if not (isinstance(m, int) and isinstance(n, int) and m >= n >= 1):
        raise GraphArgumentError(f'K_(m,n) characterisation needs m >= n >= 1, got m={m}, n={n}')
    if m > n:
        return VertexSet.fromIndices(range(m, m + n), m + n)
    return VertexSet.full(m + n)


def pathMembers(n, case):
    keep = {
        PathInfluenceSpec.Case.ALL: lambda index: True,
        PathInfluenceSpec.Case.INTERIOR: lambda index: 0 < index < n - 1,
        PathInfluenceSpec.Case.PERFECT_CODE: lambda index: index % 3 == 1,
        PathInfluenceSpec.Case.WITHOUT_CLASS_ONE: lambda index: index % 3 != 0,
        PathInfluenceSpec.Case.WITHOUT_CLASS_THREE: lambda index: index % 3 != 2,
    }[case]
    return VertexSet.fromIndices([index for index in range(n) if keep(index)], n)


def influencingPath(n, p):
    """
    Influencing set of P_n keyed on n mod 3 and the coverage target j = ceil(pn).
    Every guard is evaluated and exactly one must fire.
    """
    if not isinstance(n, int) or n < 2:
        raise GraphArgumentError(f'Path characterisation needs n >= 2, got {n}')
    requirePositiveProportion(p)

    j = coverageTarget(n, p)
    residue = n % 3
    if residue == 0:
        guards = [
            (PathInfluenceSpec.Case.ALL, j % 3 in (1, 2)),
            (PathInfluenceSpec.Case.INTERIOR, j % 3 == 0 and j < n),
            (PathInfluenceSpec.Case.PERFECT_CODE, j == n),
        ]
    elif residue == 1:
        guards = [
            (PathInfluenceSpec.Case.ALL, j % 3 in (1, 2)),
            (PathInfluenceSpec.Case.INTERIOR, j % 3 == 0 and j != n - 1),
            (PathInfluenceSpec.Case.WITHOUT_CLASS_ONE, j == n - 1),
        ]
    else:
        guards = [
            (PathInfluenceSpec.Case.ALL, j % 3 == 1 or (j % 3 == 2 and j < n)),
            (PathInfluenceSpec.Case.INTERIOR, j % 3 == 0),
            (PathInfluenceSpec.Case.WITHOUT_CLASS_THREE, j == n),
        ]

    fired = [case for case, applies in guards if applies]
    assert len(fired) == 1, f'Path influence guards for n={n}, j={j} fired {fired}'
    return PathInfluenceSpec(residue, fired[0], pathMembers(n, fired[0]))


def influencingIntersectionPath(n):
    if not isinstance(n, int) or n < 3:
        raise GraphArgumentError(f'Path intersection characterisation needs n >= 3, got {n}')

    residue = n % 3
    if residue == 0:
        indices = [index for index in range(n) if index % 3 == 1]
    elif residue == 1:
        indices = [index for k in range((n - 4) // 3 + 1) for index in (1 + 3 * k, 2 + 3 * k)]
    else:
        bound = (n - 2) // 3
        indices = [3 * k for k in range(1, bound + 1)] + [1 + 3 * j for j in range(bound)]
    return VertexSet.fromIndices(indices, n)


def influencingFullThreshold(g):
    """(delta + 1) / n; every p up to it makes the whole vertex set influencing."""
    if g.order < 1:
        raise GraphArgumentError('Full influence threshold needs a graph with at least one vertex')
    return Proportion(g.minDegree() + 1, g.order)
