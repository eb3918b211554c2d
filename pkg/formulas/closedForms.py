import math

from graphs.exceptions import GraphArgumentError
from graphs.structures import VertexSet


def requirePositive(**values):
    for name, value in values.items():
        if not isinstance(value, int) or value < 1:
            raise GraphArgumentError(f'{name} must be a positive integer, got {value}')


def ceilDiv(numerator, denominator):
    return -(-numerator // denominator)


def gammaHalfPath(n):
    requirePositive(n=n)
    return ceilDiv(n, 6)


def gammaHalfGrid(m, n):
    """P_m□P_n at p = 1/2 with 2 <= m <= n."""
    requirePositive(m=m, n=n)
    if m < 2 or m > n:
        raise GraphArgumentError(f'Grid sides must satisfy 2 <= m <= n, got m={m}, n={n}')
    if m == 2:
        return ceilDiv(n, 4)
    return ceilDiv(m * n, 10)


def gammaHalfCompleteProduct(m, n):
    """Least k >= 1 with k(m + n) - k^2 >= mn / 2, searched in integers."""
    requirePositive(m=m, n=n)
    k = 1
    while 2 * k * (m + n) - 2 * k * k < m * n:
        k += 1
    return k


def gammaHalfCompleteProductClosedForm(m, n):
    """ceil((m + n - sqrt(m^2 + n^2)) / 2) using the exact integer square root."""
    requirePositive(m=m, n=n)
    return (m + n - math.isqrt(m * m + n * n) + 1) // 2


def gammaHalfPathComplete(n, m):
    """P_n□K_m at p = 1/2."""
    requirePositive(n=n, m=m)
    if n < 2 or m < 2:
        raise GraphArgumentError(f'P_n□K_m needs n >= 2 and m >= 2, got n={n}, m={m}')
    return ceilDiv(m * n, 2 * (m + 2))


def conjecturedLowerBound(gpG, gpH):
    return gpG * gpH


def halfPathWitness(n):
    """Centres 1, 4, 7, ... each covering three fresh path vertices."""
    size = gammaHalfPath(n)
    return VertexSet.fromIndices([min(1 + 3 * i, n - 1) for i in range(size)], n)


def halfCompleteProductWitness(m, n):
    # diagonal (i, i) of K_m□K_n; k distinct rows and columns cover k(m + n) - k^2
    size = gammaHalfCompleteProduct(m, n)
    return VertexSet.fromIndices([i * n + i for i in range(size)], m * n)


def halfPathCompleteWitness(n, m):
    """
    Witness on P_n□K_m, vertex (position, a) at index position * m + a. Odd interior
    positions come first, then the far endpoint, then the near one; consecutive
    choices alternate between clique copies 0 and 1.
    """
    size = gammaHalfPathComplete(n, m)
    positions = list(range(1, n - 1, 2)) + [n - 1, 0]
    return VertexSet.fromIndices(
        [position * m + index % 2 for index, position in enumerate(positions[:size])],
        n * m,
    )
