from igraph import Graph as IGraph


def to_igraph(G):
    """Copy the vertex/edge structure of a networkx graph into igraph.

    Returns
    -------
    The igraph Graph and the list mapping igraph indices back to vertices.
    """
    names = list(G.nodes)
    name_to_idx = {name: i for i, name in enumerate(names)}
    edges = [(name_to_idx[u], name_to_idx[v]) for u, v in G.edges()]
    return IGraph(n=len(names), edges=edges, directed=True), names


def weakly_connected_components(G):
    g, names = to_igraph(G)
    components = g.connected_components(mode="weak")
    return sorted((sorted(names[i] for i in c) for c in components), key=lambda c: c[0])


def sources(G):
    g, names = to_igraph(G)
    return sorted(names[i] for i, d in enumerate(g.indegree()) if d == 0)
