import networkx as nx


class GraphNx(nx.MultiDiGraph):
    pass


def weakly_connected_components(G):
    """Components of the underlying undirected graph, each a sorted list,
    ordered by their smallest vertex."""
    return sorted((sorted(c) for c in nx.weakly_connected_components(G)), key=lambda c: c[0])


def sources(G):
    return sorted(v for v, d in G.in_degree() if d == 0)
