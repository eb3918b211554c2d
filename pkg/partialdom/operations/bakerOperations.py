from faker import Faker

from graphs.structures import Graph, Proportion


def seededFaker(seed=None):
    faker = Faker()
    if seed is not None:
        faker.seed_instance(seed)
    return faker


def createRandomGraph(order=None, edgeProbability=50, faker=None, connected=False):
    """
    Erdos-Renyi style graph; edgeProbability is a percentage. With connected=True a random
    spanning tree is laid down first so the result is always connected.
    """
    faker = faker or seededFaker()
    if order is None:
        order = faker.random_int(min=1, max=8)

    edges = []
    if connected:
        edges += [(vertex, faker.random_int(min=0, max=vertex - 1)) for vertex in range(1, order)]

    edges += [
        (u, v)
        for u in range(order)
        for v in range(u + 1, order)
        if faker.pybool(truth_probability=edgeProbability)
    ]
    return Graph.fromEdges(order, edges)


def createRandomGraphs(limit=200, maxOrder=8, seed=None, connected=False):
    faker = seededFaker(seed)
    return [
        createRandomGraph(
            order=faker.random_int(min=1, max=maxOrder),
            edgeProbability=faker.random_int(min=10, max=90),
            faker=faker,
            connected=connected,
        )
        for _ in range(limit)
    ]


def createRandomProportion(faker=None, maxDenominator=12):
    faker = faker or seededFaker()
    denominator = faker.random_int(min=1, max=maxDenominator)
    return Proportion(faker.random_int(min=0, max=denominator), denominator)


def createRandomProportions(limit=5, seed=None):
    faker = seededFaker(seed)
    return [createRandomProportion(faker) for _ in range(limit)]
