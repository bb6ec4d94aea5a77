import pytest

from rulingsets.generators import generate, with_random_ids


def seeded_family(count, max_n=60, families=("ring", "path", "erdos_renyi", "d_regular")):
    """Deterministic mixed bag of small graphs for property checks."""
    graphs = []
    i = 0
    seed = 0
    while len(graphs) < count:
        fam = families[i % len(families)]
        n = 4 + (11 * seed) % (max_n - 3)
        try:
            if fam == "ring":
                g = generate("ring", n=max(n, 3), seed=seed)
            elif fam == "path":
                g = generate("path", n=n, seed=seed)
            elif fam == "erdos_renyi":
                g = generate("erdos_renyi", n=n, p=0.08, seed=seed)
            else:
                g = generate("d_regular", n=n + (n % 2), d=3, seed=seed)
        except ValueError:
            seed += 1
            continue
        if seed % 3 == 2:
            g = with_random_ids(g, seed=seed)
        graphs.append(g)
        i += 1
        seed += 1
    return graphs


@pytest.fixture(scope="session")
def mixed_graphs():
    return seeded_family(40)
