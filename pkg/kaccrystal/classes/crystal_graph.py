from collections import Counter
from concurrent.futures import ThreadPoolExecutor

from .core import Graph, sources, weakly_connected_components
from .errors import SizeCapExceeded


class CrystalGraph(Graph):
    """Colored directed graph of a finite crystal.

    Vertices are integer ids in insertion order, each carrying its crystal
    `element` and weight `wt`. An edge u →ᵏ v (edge key k) means f̃_k u = v.
    The graph attributes `rank`, `lambda` and `crystal` (the object whose
    operators generated it, if any) travel with the graph.
    """

    def __init__(self, rank=None, lam=None, crystal=None, **attr):
        super().__init__(**attr)
        self.graph['rank'] = rank
        self.graph['lambda'] = lam
        self.graph['crystal'] = crystal
        self.index = {}

    @property
    def rank(self):
        return self.graph['rank']

    @property
    def lam(self):
        return self.graph['lambda']

    @property
    def crystal(self):
        return self.graph['crystal']

    def add_element(self, x, wt=None):
        """Add `x` if new; return its vertex id."""
        v = self.index.get(x)
        if v is None:
            v = len(self.index)
            self.index[x] = v
            self.add_node(v, element=x, wt=wt)
        return v

    def element(self, v):
        return self.nodes[v]['element']

    def weight(self, v):
        return self.nodes[v]['wt']

    def vertex(self, x):
        return self.index[x]

    def elements(self):
        return [self.element(v) for v in sorted(self.nodes)]

    def add_colored_edge(self, u, k, v):
        self.add_edge(u, v, key=k, color=k)

    def colored_edges(self):
        """(source, color, target) triples sorted by source then color."""
        return sorted((u, k, v) for u, v, k in self.edges(keys=True))

    def f_target(self, u, k):
        for v, keys in self._succ[u].items():
            if k in keys:
                return v
        return None

    def e_target(self, v, k):
        for u, keys in self._pred[v].items():
            if k in keys:
                return u
        return None

    def out_colors(self, v):
        return Counter(k for _, _, k in self.out_edges(v, keys=True))

    def in_colors(self, v):
        return Counter(k for _, _, k in self.in_edges(v, keys=True))

    def sources(self, backend=None):
        return sources(self, backend)

    def components(self, backend=None):
        return weakly_connected_components(self, backend)

    def weights(self):
        return Counter(self.weight(v) for v in self.nodes)


def closure_graph(crystal, seeds, colors, key=None, cap=None, threads=None):
    """Breadth-first closure of `seeds` under every ẽ_k and f̃_k.

    Vertices are numbered level by level; within a level new elements are
    ordered by `key`. Edges are recorded for f̃_k only.
    """
    key = key or (lambda x: x)
    g = CrystalGraph(crystal.rank, getattr(crystal, 'lam', None), crystal)

    def _expand(x):
        found = []
        for k in colors:
            for y in (crystal.f(k, x), crystal.e(k, x)):
                if y is not None:
                    found.append(y)
        return found

    frontier = sorted(set(seeds), key=key)
    for x in frontier:
        g.add_element(x, crystal.weight(x))

    executor = ThreadPoolExecutor(max_workers=threads) if threads and threads > 1 else None
    try:
        while frontier:
            if executor is None:
                expansions = map(_expand, frontier)
            else:
                expansions = executor.map(_expand, frontier)
            fresh = set()
            for found in expansions:
                fresh.update(y for y in found if y not in g.index)
            frontier = sorted(fresh, key=key)
            if cap is not None and len(g.index) + len(frontier) > cap:
                raise SizeCapExceeded(len(g.index) + len(frontier), cap)
            for y in frontier:
                g.add_element(y, crystal.weight(y))
    finally:
        if executor is not None:
            executor.shutdown()

    for u in sorted(g.nodes):
        x = g.element(u)
        for k in colors:
            y = crystal.f(k, x)
            if y is not None:
                g.add_colored_edge(u, k, g.vertex(y))
    return g
