from .graph_nx import GraphNx, weakly_connected_components as nx_components, sources as nx_sources

# Optional igraph backend
try:
    from .graph_ig import weakly_connected_components as ig_components, sources as ig_sources
except ImportError:
    ig_components = None
    ig_sources = None

_DEFAULT = "networkx"

_BACKENDS = {
    "networkx": {"weakly_connected_components": nx_components, "sources": nx_sources},
    "igraph": {"weakly_connected_components": ig_components, "sources": ig_sources},
}

# crystal graphs are stored by networkx; the backend only picks the
# connectivity algorithms
Graph = GraphNx


def get_backend(backend=None):
    if backend is None:
        backend = _DEFAULT
    elif backend not in _BACKENDS:
        raise ValueError(f"Unknown backend '{backend}'. Choose from: {list(_BACKENDS.keys())}")

    cfg = _BACKENDS[backend]
    if any(fn is None for fn in cfg.values()):
        raise ImportError(
            "igraph backend is not installed. Run: pip install kaccrystal[igraph] or pip install igraph"
        )
    return cfg


def weakly_connected_components(G, backend=None):
    return get_backend(backend)["weakly_connected_components"](G)


def sources(G, backend=None):
    return get_backend(backend)["sources"](G)


__all__ = [
    "Graph",
    "get_backend",
    "weakly_connected_components",
    "sources",
]
