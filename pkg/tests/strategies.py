from itertools import combinations

from hypothesis import strategies as st

from graphdim.core.graph import Graph, from_edges


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edges(n, [pair for pair, flag in zip(pairs, keep) if flag])


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    edges = {(draw(st.integers(min_value=0, max_value=v - 1)), v) for v in range(1, n)}
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges.update(pair for pair, flag in zip(pairs, keep) if flag)
    return from_edges(n, sorted(edges))


@st.composite
def graphs_with_permutation(draw, max_n: int = 7) -> tuple[Graph, list[int]]:
    graph = draw(graphs(max_n=max_n))
    perm = draw(st.permutations(list(range(graph.n))))
    return graph, list(perm)


@st.composite
def triangle_free_graphs(draw, min_n: int = 2, max_n: int = 8) -> Graph:
    """Triangle-free graphs without isolated vertices."""
    n = draw(st.integers(min_value=max(min_n, 2), max_value=max_n))
    pairs = draw(st.permutations(list(combinations(range(n), 2))))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    adj = [0] * n
    edges: list[tuple[int, int]] = []

    def add(u: int, v: int) -> None:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        edges.append((u, v))

    for (u, v), flag in zip(pairs, keep):
        if flag and not adj[u] & adj[v]:
            add(u, v)
    # an isolated endpoint cannot close a triangle
    for v in range(n):
        if not adj[v]:
            add(v, (v + 1) % n)
    return from_edges(n, edges)
