from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .errors import (InsertionOverflow, MalformedHookTableau, MultipleSources, NotDominant, NotInImage,
                     NotIsomorphic, PreconditionViolated, ShapeViolation)
from .kac import FactorCrystal, KacCrystal, KacElement
from .rsk import KappaElement, rho, rho_inv
from .shapes import SkewShape, conjugate, normalize_partition
from .tableau import B, B_DUAL, B_MINUS, B_PLUS, Tableau, validate
from .weights import delta, delta_minus, delta_plus, hook_bijection_inv


@dataclass(frozen=True, eq=False)
class TransportIso:
    """A colored graph isomorphism found by matching sources and following
    same-colored edges.

    `vertex_map` sends vertex ids of `source` to vertex ids of `target`;
    calling the iso maps crystal elements.
    """
    source: object
    target: object
    vertex_map: dict
    shift: object = None

    def __call__(self, x):
        return self.target.element(self.vertex_map[self.source.vertex(x)])

    def __len__(self):
        return len(self.vertex_map)

    def inverse(self):
        return TransportIso(
            self.target, self.source, {w: v for v, w in self.vertex_map.items()},
            None if self.shift is None else -self.shift,
        )

    def compose(self, other):
        """self ∘ other: apply `other` first."""
        vertex_map = {
            v: self.vertex_map[self.source.vertex(other.target.element(w))]
            for v, w in other.vertex_map.items()
        }
        if self.shift is None or other.shift is None:
            shift = None
        else:
            shift = self.shift + other.shift
        return TransportIso(other.source, self.target, vertex_map, shift)


def _unique_source(g):
    found = g.sources()
    if len(found) != 1:
        raise MultipleSources(found)
    return found[0]


def transport_iso(src, dst, shift=None):
    """
    The canonical isomorphism between two connected crystal graphs with one
    source each.

    Parameters
    ----------
    src, dst : CrystalGraph
    shift : expected weight difference wt(dst) − wt(src); inferred from the
        sources when None

    Returns
    -------
    A TransportIso

    Raises
    ------
    MultipleSources if a graph has more than one source,
    NotIsomorphic with the first mismatching edge otherwise.
    """
    a, b = _unique_source(src), _unique_source(dst)
    if src.number_of_nodes() != dst.number_of_nodes():
        raise NotIsomorphic(
            f"graphs have {src.number_of_nodes()} and {dst.number_of_nodes()} vertices"
        )
    if shift is None:
        shift = dst.weight(b) - src.weight(a)

    vertex_map = {a: b}
    used = {b}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        w = vertex_map[u]
        if src.out_colors(u) != dst.out_colors(w) or src.in_colors(u) != dst.in_colors(w):
            raise NotIsomorphic("colored degrees differ", (u, w))
        if dst.weight(w) != src.weight(u) + shift:
            raise NotIsomorphic("weight shift differs", (u, w))
        steps = [(v, dst.f_target(w, k), (u, k, v)) for _, v, k in src.out_edges(u, keys=True)]
        steps += [(v, dst.e_target(w, k), (v, k, u)) for v, _, k in src.in_edges(u, keys=True)]
        for v, image, edge in steps:
            if v in vertex_map:
                if vertex_map[v] != image:
                    raise NotIsomorphic("edge does not close up", edge)
                continue
            if image is None or image in used:
                raise NotIsomorphic("edge has no matching image", edge)
            vertex_map[v] = image
            used.add(image)
            queue.append(v)
    if len(vertex_map) != src.number_of_nodes():
        raise NotIsomorphic("source graph is not connected")
    return TransportIso(src, dst, vertex_map, shift)


@lru_cache(maxsize=None)
def sigma_iso(rank, eta, ell):
    """σ^{−ℓ} : SST_{𝓑₊}(η) → SST_{𝓑₊∨}((ℓ^m)/η), weight shift −ℓδ₊.

    The inverse is σ^ℓ.
    """
    eta = normalize_partition(eta)
    if len(eta) > rank.m or (eta and eta[0] > ell):
        raise ShapeViolation(f"partition {eta} does not fit the {rank.m}x{ell} rectangle")
    src = FactorCrystal(rank, B_PLUS, SkewShape.straight(eta)).graph()
    dst = FactorCrystal(rank, B_DUAL, SkewShape.rectangle(ell, rank.m, eta)).graph()
    return transport_iso(src, dst, -ell * delta_plus(rank))


def complement_plus(t, ell, m):
    """σ^{−ℓ} by columns: a column with barred letters A becomes the dual
    column {1̄∨,…,m̄∨} ∖ A, bottom-justified."""
    if t.alphabet != B_PLUS or any(t.shape.inner):
        raise ShapeViolation("complement_plus needs a straight 𝓑₊ tableau")
    eta = normalize_partition(t.shape.outer)
    cells = {}
    for c in range(ell):
        taken = {-x for _, x in t.column(c)}
        rest = [i for i in range(1, m + 1) if i not in taken]
        top = m - len(rest)
        for offset, i in enumerate(rest):
            cells[(top + offset, c)] = i
    return Tableau.from_cells(B_DUAL, SkewShape.rectangle(ell, m, eta), cells)


def complement_dual(t, m):
    """Inverse of `complement_plus`."""
    if t.alphabet != B_DUAL or not t.shape.antinormal:
        raise ShapeViolation("complement_dual needs an anti-normal 𝓑₊∨ tableau")
    eta = t.shape.inner_partition()
    cells = {}
    for c in range(t.shape.width):
        taken = {x for _, x in t.column(c)}
        rest = [-i for i in range(m, 0, -1) if i not in taken]
        for r, x in enumerate(rest):
            cells[(r, c)] = x
    return Tableau.from_cells(B_PLUS, SkewShape.straight(eta), cells)


@dataclass(frozen=True)
class HookTableauSplit:
    """T⁺_{≤m}, T⁻_{≤m} and T_{>m} of a hook tableau."""
    t_plus_top: Tableau
    t_minus_top: Tableau
    t_below: Tableau

    @property
    def eta(self):
        return normalize_partition(self.t_plus_top.shape.outer)


def _check_hook_tableau(t):
    if t.alphabet != B or t.shape.antinormal or any(t.shape.inner):
        raise MalformedHookTableau(f"expected a straight tableau over {B}")
    if not validate(t):
        raise MalformedHookTableau(f"tableau {t} is not semistandard")


def split_hook(rank, t):
    """
    Cut a hook tableau along row m and along the barred/unbarred boundary.

    Raises
    ------
    MalformedHookTableau if the tableau is not semistandard over 𝓑 or a row
    below m holds a barred letter.
    """
    _check_hook_tableau(t)
    m = rank.m
    top, below = t.rows[:m], t.rows[m:]
    for r, row in enumerate(below, start=m):
        if any(x < 0 for x in row):
            raise MalformedHookTableau(f"row {r} lies below row {m} and holds a barred letter")
    eta = tuple(sum(1 for x in row if x < 0) for row in top)
    t_plus = Tableau.straight(B_PLUS, [row[:e] for row, e in zip(top, eta) if e])
    t_minus = Tableau(B_MINUS, SkewShape([len(row) for row in top], eta), [row[e:] for row, e in zip(top, eta)])
    t_below = Tableau.straight(B_MINUS, below)
    return HookTableauSplit(t_plus, t_minus, t_below)


def reassemble(parts):
    """Inverse of `split_hook`."""
    plus_rows = list(parts.t_plus_top.rows)
    minus_rows = list(parts.t_minus_top.rows)
    height = max(len(plus_rows), len(minus_rows))
    plus_rows += [()] * (height - len(plus_rows))
    minus_rows += [()] * (height - len(minus_rows))
    rows = [p + q for p, q in zip(plus_rows, minus_rows)] + list(parts.t_below.rows)
    return Tableau.straight(B, rows)


def _hook_window(rank, lam):
    if not lam.is_hook_dominant():
        raise NotDominant(f"weight {lam} is not in the hook-dominant cone")
    shape = hook_bijection_inv(rank, lam)
    ell = shape[0] if shape else 0
    return shape, ell


def xi(rank, lam, t):
    """
    The embedding ξ_λ : SST_𝓑(λ°) → 𝓑(K(λ)).

    With ℓ = λ°_1, ξ_λ(T) = (id × σ^ℓ × id) ρ⁻¹_{λ−ℓδ₊}(σ^{−ℓ}(T⁺_{≤m}), T⁻_{≤m}, T_{>m}).

    Returns
    -------
    A KacElement of the normal model of K(λ).
    """
    shape, ell = _hook_window(rank, lam)
    if t.shape.outer != shape:
        raise MalformedHookTableau(f"tableau shape {t.shape.outer} is not λ° = {shape}")
    parts = split_hook(rank, t)
    eta = parts.eta
    kappa = KappaElement(
        sigma_iso(rank, eta, ell)(parts.t_plus_top),
        parts.t_minus_top, parts.t_below, ell, tuple(lam.plus), eta,
    )
    shifted = lam - ell * delta_plus(rank)
    x = rho_inv(rank, shifted, kappa, strict=False)
    t_plus = sigma_iso(rank, lam.plus, ell).inverse()(x.t_plus)
    return KacElement(x.s, t_plus, x.t_minus)


def pi_bar(rank, lam, b):
    """Partial inverse of `xi`: the tableau T with ξ_λ(T) = b, or None."""
    shape, ell = _hook_window(rank, lam)
    if b.t_plus.alphabet != B_PLUS or b.t_plus.shape != SkewShape.straight(lam.plus):
        return None
    if b.t_minus.shape != SkewShape.straight(conjugate(lam.minus)):
        return None
    shifted = lam - ell * delta_plus(rank)
    try:
        u = sigma_iso(rank, lam.plus, ell)(b.t_plus)
        kappa = rho(rank, shifted, KacElement(b.s, u, b.t_minus), ell=ell, strict=False)
        t_plus_top = sigma_iso(rank, kappa.eta, ell).inverse()(kappa.p)
        t = reassemble(HookTableauSplit(t_plus_top, kappa.q, kappa.v))
    except (InsertionOverflow, KeyError, NotInImage, PreconditionViolated, ShapeViolation):
        return None
    if t.shape.outer != shape or not validate(t, rank):
        return None
    return t


@dataclass(frozen=True, eq=False)
class KacShift:
    """ς^k = id × σ^k × τ^k : 𝓑(K(λ)) → 𝓑(K(λ+kδ))."""
    plus: TransportIso
    minus: TransportIso
    shift: object

    def __call__(self, x):
        return KacElement(x.s, self.plus(x.t_plus), self.minus(x.t_minus))


def shift_kac_iso(rank, lam, k):
    """Build ς^k factorwise by transport on the two tableau factors."""
    source = KacCrystal(rank, lam)
    target = KacCrystal(rank, lam + k * delta(rank))
    plus = transport_iso(source.plus.graph(), target.plus.graph(), k * delta_plus(rank))
    minus = transport_iso(source.minus.graph(), target.minus.graph(), k * delta_minus(rank))
    return KacShift(plus, minus, k * delta(rank))
