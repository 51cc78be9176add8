import pytest

from johnson_cliques import JohnsonParams, materialize, maximal_cliques, unrank


@pytest.fixture(scope="session")
def oracle_cache():
    """Memoized (graph, labels, cliques) per (n, m), shared across tests."""
    cache = {}

    def get(n, m):
        if (n, m) not in cache:
            p = JohnsonParams(n, m)
            g = materialize(p)
            labels = [unrank(r, n, m) for r in range(g.vertex_count)]
            cache[(n, m)] = (g, labels, maximal_cliques(g))
        return cache[(n, m)]

    return get
