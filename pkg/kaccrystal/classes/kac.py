from dataclasses import dataclass
from itertools import product

from .crystal_graph import closure_graph
from .errors import ColorOutOfRange, NotDominant, PreconditionViolated, SizeCapExceeded
from .odd_roots import OddRootSet, odd_root_crystal
from .shapes import SkewShape, conjugate
from .tableau import B_DUAL, B_MINUS, B_PLUS, COLUMNS, Tableau, count_sst, enumerate_sst
from .weights import Weight, delta_minus, delta_plus
from .word_crystal import E, F, Signature, check_direction, tableau_crystal, tensor_counts, tensor_pair


DEFAULT_CAP = 200_000

NORMAL = 'normal'
DUAL = 'dual'
MODELS = (NORMAL, DUAL)


@dataclass(frozen=True)
class KacElement:
    """A vertex (S, T₊, T₋) of the Kac module crystal."""
    s: OddRootSet
    t_plus: Tableau
    t_minus: Tableau

    def key(self):
        return (self.s.bits, self.t_plus.codes, self.t_minus.codes)

    def to_dict(self):
        return {'S': self.s.matrix(), 'Tplus': self.t_plus.to_dict(), 'Tminus': self.t_minus.to_dict()}

    @classmethod
    def from_dict(cls, data):
        return cls(
            OddRootSet.from_matrix(data['S']),
            Tableau.from_dict(data['Tplus']),
            Tableau.from_dict(data['Tminus']),
        )


def kac_key(x):
    return x.key()


def kac_signature(x, k):
    """Signature(ε_k, φ_k, ẽ_k x, f̃_k x) of a Kac element.

    k < 0 acts on S ⊗ T₊ by the lower rule, k > 0 on S ⊗ T₋ by the upper
    rule, k = 0 on S alone.
    """
    sd = odd_root_crystal(x.s, k)
    if k == 0:
        return Signature(
            sd.eps, sd.phi,
            None if sd.e is None else KacElement(sd.e, x.t_plus, x.t_minus),
            None if sd.f is None else KacElement(sd.f, x.t_plus, x.t_minus),
        )
    upper = k > 0
    t = x.t_minus if upper else x.t_plus
    td = tableau_crystal(t, k, COLUMNS)
    first, second = (sd.eps, sd.phi), (td.eps, td.phi)
    eps, phi = tensor_counts(first, second, upper)

    def _build(which, s_result, t_result):
        if which is None:
            return None
        if which == 0:
            return KacElement(s_result, x.t_plus, x.t_minus)
        if upper:
            return KacElement(x.s, x.t_plus, t_result)
        return KacElement(x.s, t_result, x.t_minus)

    e = _build(tensor_pair(first, second, E, upper), sd.e, td.e)
    f = _build(tensor_pair(first, second, F, upper), sd.f, td.f)
    return Signature(eps, phi, e, f)


def apply_kac(k, direction, x):
    """ẽ_k / f̃_k on a Kac element; None when any component is killed."""
    check_direction(direction)
    if not -(x.s.m - 1) <= k <= x.s.n - 1:
        raise ColorOutOfRange(f"color {k} is not in I for rank ({x.s.m}|{x.s.n})")
    data = kac_signature(x, k)
    return data.e if direction == E else data.f


def default_ell(rank, lam):
    """Smallest rectangle width ℓ with ℓ + λ_1̄ ≥ n.

    Every insertion of an odd root then stays inside the ℓ-column rectangle.
    """
    return max(0, rank.n - lam.plus[-1])


def highest_plus_tableau(shape, m):
    rows = [[-(m - r)] * shape.row_length(r) for r in range(shape.rows)]
    return Tableau(B_PLUS, shape, rows)


def highest_dual_tableau(shape, m):
    """Complement of the highest 𝓑₊ tableau: column c holds 1̄∨, 2̄∨, … on
    its cells, top to bottom."""
    cells = {}
    for c in range(shape.width):
        rows = shape.column_rows(c)
        for x, r in enumerate(rows, start=1):
            cells[(r, c)] = x
    return Tableau.from_cells(B_DUAL, shape, cells)


def highest_minus_tableau(shape):
    rows = [list(range(1, shape.row_length(r) + 1)) for r in range(shape.rows)]
    return Tableau(B_MINUS, shape, rows)


class FactorCrystal:
    """The tableau crystal SST(shape) with a weight offset, on a color set."""

    def __init__(self, rank, alphabet, shape, offset=None, colors=None):
        self.rank = rank
        self.alphabet = alphabet
        self.shape = shape
        self.offset = offset if offset is not None else Weight.zero(rank)
        if colors is None:
            colors = rank.odd_colors if alphabet == B_MINUS else rank.even_colors
        self.colors = tuple(colors)

    def e(self, k, t):
        return tableau_crystal(t, k, COLUMNS).e

    def f(self, k, t):
        return tableau_crystal(t, k, COLUMNS).f

    def weight(self, t):
        return t.weight(self.rank) + self.offset

    def elements(self):
        return enumerate_sst(self.shape, self.alphabet, self.rank.m, self.rank.n)

    def cardinality(self):
        return count_sst(self.shape, self.alphabet, self.rank.m, self.rank.n)

    def graph(self):
        return closure_graph(self, self.elements(), self.colors, key=lambda t: t.codes)


class KacCrystal:
    """The crystal 𝒫(Φ⁻₁) × 𝓑^{λ₊} × 𝓑^{λ₋} of the Kac module K(λ).

    Parameters
    ----------
    rank : Rank
    lam : dominant Weight
    model : `normal` realizes 𝓑^{λ₊} on 𝓑₊-tableaux of shape (λ_m̄,…,λ_1̄),
        shifted by c = −λ_1̄ when that is positive; `dual` realizes it on
        𝓑₊∨-tableaux of shape (ℓ^m)/(ℓ+λ₊)
    ell : rectangle width of the dual model, default `default_ell`
    """

    def __init__(self, rank, lam, model=NORMAL, ell=None):
        if lam.rank != rank:
            raise ValueError(f"weight {lam} is not of rank {rank}")
        if not lam.is_dominant():
            raise NotDominant(f"weight {lam} is not dominant")
        if model not in MODELS:
            raise ValueError(f"Unknown model '{model}'. Choose from: {list(MODELS)}")
        self.rank = rank
        self.lam = lam
        self.model = model
        m, n = rank.m, rank.n
        plus, minus = lam.plus, lam.minus

        if model == NORMAL:
            c = max(0, -plus[-1])
            self.ell = None
            plus_shape = SkewShape.straight([x + c for x in plus])
            self.plus = FactorCrystal(rank, B_PLUS, plus_shape, -c * delta_plus(rank))
            self.t_plus_top = highest_plus_tableau(plus_shape, m)
        else:
            self.ell = default_ell(rank, lam) if ell is None else ell
            if plus[0] > 0 or self.ell + plus[-1] < 0:
                raise PreconditionViolated(
                    f"dual model needs λ_m̄ ≤ 0 ≤ ℓ+λ_1̄, got λ={lam}, ℓ={self.ell}"
                )
            plus_shape = SkewShape.rectangle(self.ell, m, [self.ell + x for x in plus])
            self.plus = FactorCrystal(rank, B_DUAL, plus_shape)
            self.t_plus_top = highest_dual_tableau(plus_shape, m)

        d = max(0, -minus[-1])
        self.nu = tuple(x + d for x in minus)
        minus_shape = SkewShape.straight(conjugate(self.nu))
        self.minus = FactorCrystal(rank, B_MINUS, minus_shape, d * delta_minus(rank))
        self.t_minus_top = highest_minus_tableau(minus_shape)
        self.offset = self.plus.offset + self.minus.offset

    def __repr__(self):
        return f"KacCrystal({self.rank}, {self.lam}, model={self.model!r})"

    @property
    def colors(self):
        return self.rank.colors

    @property
    def highest_weight_element(self):
        return KacElement(OddRootSet(self.rank.m, self.rank.n), self.t_plus_top, self.t_minus_top)

    def weight(self, x):
        return x.s.weight(self.rank) + x.t_plus.weight(self.rank) + x.t_minus.weight(self.rank) + self.offset

    def e(self, k, x):
        return kac_signature(x, k).e

    def f(self, k, x):
        return kac_signature(x, k).f

    def apply(self, k, direction, x):
        return apply_kac(k, direction, x)

    def epsilon(self, k, x):
        return kac_signature(x, k).eps

    def phi(self, k, x):
        return kac_signature(x, k).phi

    def odd_root_sets(self):
        m, n = self.rank.m, self.rank.n
        return [OddRootSet(m, n, bits) for bits in range(1 << (m * n))]

    def cardinality(self):
        return (1 << (self.rank.m * self.rank.n)) * self.plus.cardinality() * self.minus.cardinality()

    def elements(self):
        """Every element, by direct enumeration of the three factors."""
        return [
            KacElement(s, tp, tm)
            for s, tp, tm in product(self.odd_root_sets(), self.plus.elements(), self.minus.elements())
        ]

    def generate_graph(self, cap=DEFAULT_CAP, threads=None):
        size = self.cardinality()
        if cap is not None and size > cap:
            raise SizeCapExceeded(size, cap)
        return closure_graph(self, [self.highest_weight_element], self.colors, key=kac_key, threads=threads)


def generate_graph(rank, lam, cap=DEFAULT_CAP, threads=None, model=NORMAL, ell=None):
    """Crystal graph of K(λ), generated from (∅, H_μ, H_ν′) by closure under
    every ẽ_k and f̃_k.

    Raises
    ------
    SizeCapExceeded when 2^{mn}·#SST(μ)·#SST(ν′) exceeds `cap`.
    """
    return KacCrystal(rank, lam, model, ell).generate_graph(cap, threads)
