from dataclasses import dataclass
from itertools import product

from ..utils import raise_warn_narrow_rectangle
from .errors import NotInImage, PreconditionViolated
from .kac import KacElement, default_ell
from .odd_roots import PREC, OddRootSet, sort_roots
from .shapes import SkewShape, conjugate, normalize_partition, pad, partitions_inside
from .tableau import (B_DUAL, B_MINUS, COLUMNS, Tableau, antinormal_insert, antinormal_uninsert,
                      enumerate_sst)
from .word_crystal import E, F, Signature, check_direction, tableau_crystal, tensor_counts, tensor_pair


PLUS = '+'
MINUS = '-'
DOT = '.'


@dataclass(frozen=True)
class KappaElement:
    """An element (P, Q, V) of the tableau model 𝒦_λ.

    P is a 𝓑₊∨-tableau of shape (ℓ^m)/η, Q a 𝓑₋-tableau of shape μ/η and
    V a 𝓑₋-tableau of shape ν.
    """
    p: Tableau
    q: Tableau
    v: Tableau
    ell: int
    mu: tuple
    eta: tuple

    def weight(self, rank):
        return self.p.weight(rank) + self.q.weight(rank) + self.v.weight(rank)

    def to_dict(self):
        return {
            'P': self.p.to_dict(),
            'Q': self.q.to_dict(),
            'V': self.v.to_dict(),
            'ell': self.ell,
            'mu': list(self.mu),
            'eta': list(self.eta),
        }

    @classmethod
    def from_dict(cls, data):
        p = Tableau.from_dict(data['P'])
        return cls(
            p, Tableau.from_dict(data['Q']), Tableau.from_dict(data['V']),
            int(data['ell']), tuple(data['mu']), normalize_partition(data.get('eta', p.shape.inner)),
        )


def kappa_window(rank, lam, ell=None, strict=True):
    """Check the λ-window of ρ and return (ℓ, μ, ν).

    strict: λ_m̄ < 0, λ_n > 0 and ℓ+λ_1̄ > 0. Otherwise the closed window
    λ_m̄ ≤ 0, λ_n ≥ 0, ℓ+λ_1̄ ≥ 0 is accepted.
    """
    plus, minus = lam.plus, lam.minus
    if ell is None:
        ell = default_ell(rank, lam)
    if strict:
        ok = plus[0] < 0 and minus[-1] > 0 and ell + plus[-1] > 0
    else:
        ok = plus[0] <= 0 and minus[-1] >= 0 and ell + plus[-1] >= 0
    if not ok or not lam.is_dominant():
        raise PreconditionViolated(f"weight {lam} with ℓ={ell} is outside the window of ρ")
    if strict and ell + plus[-1] < rank.n:
        raise_warn_narrow_rectangle(rank, lam, ell)
    mu = tuple(ell + x for x in plus)
    return ell, mu, conjugate(minus)


def _check_dual_factor(t, ell, m, mu):
    expected = SkewShape.rectangle(ell, m, mu)
    if t.alphabet != B_DUAL or t.shape != expected:
        raise PreconditionViolated(f"expected a {B_DUAL} tableau of shape {expected}, got {t.shape}")


def rho(rank, lam, x, ell=None, strict=True):
    """ρ_λ(S, U, V) = (P(U←S), Q(U←S), V).

    w(S) = ī_1∨ … ī_r∨ lists S in ≺-order and is inserted from ī_r∨ to
    ī_1∨; the cell created by ī_k∨ records j_k in Q.
    """
    ell, mu, _ = kappa_window(rank, lam, ell, strict)
    _check_dual_factor(x.t_plus, ell, rank.m, mu)
    p = x.t_plus
    recorded = {}
    for i, j in reversed(sort_roots(x.s, PREC)):
        p, cell = antinormal_insert(p, i)
        recorded[cell] = j
    eta = p.shape.inner_partition()
    q = Tableau.from_cells(B_MINUS, SkewShape(mu, eta), recorded)
    return KappaElement(p, q, x.t_minus, ell, mu, eta)


def rho_inv(rank, lam, kappa, strict=True):
    """Inverse of `rho`.

    The last insertion recorded the ≺-smallest root: its cell holds the
    smallest entry of Q and is the topmost such cell. Undo it and repeat.
    """
    ell, mu, _ = kappa_window(rank, lam, kappa.ell, strict)
    cells = dict(kappa.q.items())
    p = kappa.p
    undone = []
    while cells:
        j = min(cells.values())
        cell = min(c for c, x in cells.items() if x == j)
        p, i = antinormal_uninsert(p, cell)
        undone.append((i, j))
        del cells[cell]
    keys = [(j, i) for i, j in undone]
    if any(keys[k] >= keys[k + 1] for k in range(len(keys) - 1)):
        raise NotInImage(f"recording tableau does not come from an odd-root set: {undone}")
    if p.shape != SkewShape.rectangle(ell, rank.m, mu):
        raise NotInImage(f"reverse insertion ends on shape {p.shape}, expected inner {mu}")
    s = OddRootSet.from_roots(rank.m, rank.n, undone)
    return KacElement(s, p, kappa.v)


def sigma_signs(kappa):
    """σ_k for k = 1, …, ℓ, counting columns from the right.

    + if P's column is empty or its top entry exceeds 1̄∨; − if P's top is
    1̄∨ and Q's top in that column is 1; · otherwise.
    """
    signs = []
    for k in range(1, kappa.ell + 1):
        c = kappa.ell - k
        pcol = kappa.p.column(c)
        if not pcol or pcol[0][1] > 1:
            signs.append(PLUS)
            continue
        qcol = kappa.q.column(c)
        signs.append(MINUS if qcol and qcol[0][1] == 1 else DOT)
    return signs


def apply_kappa_zero(direction, kappa, signs=sigma_signs):
    """ẽ_0 / f̃_0 on 𝒦_λ by the σ sign rule.

    At the first column k₀ with σ ≠ ·, f̃_0 puts 1̄∨ on top of P's column and
    1 on the same cell of Q when σ = +; ẽ_0 removes that pair when σ = −.
    `signs` computes the σ sequence.
    """
    check_direction(direction)
    sequence = signs(kappa)
    k0 = next((k for k, sign in enumerate(sequence) if sign != DOT), None)
    if k0 is None:
        return None
    sign = sequence[k0]
    if (direction == F) != (sign == PLUS):
        return None
    m, ell = kappa.p.shape.rows, kappa.ell
    c = ell - 1 - k0
    pcol = kappa.p.column(c)
    eta = list(pad(kappa.eta, m))
    p_cells, q_cells = kappa.p.cells(), kappa.q.cells()
    if direction == F:
        r = (pcol[0][0] if pcol else m) - 1
        if r < 0 or eta[r] != c + 1 or pad(kappa.mu, m)[r] <= c:
            return None
        eta[r] = c
        p_cells[(r, c)] = 1
        q_cells[(r, c)] = 1
    else:
        r = pcol[0][0]
        eta[r] = c + 1
        del p_cells[(r, c)]
        del q_cells[(r, c)]
    eta = normalize_partition(eta)
    p = Tableau.from_cells(B_DUAL, SkewShape.rectangle(ell, m, eta), p_cells)
    q = Tableau.from_cells(B_MINUS, SkewShape(kappa.mu, eta), q_cells)
    return KappaElement(p, q, kappa.v, ell, kappa.mu, eta)


def kappa_signature(kappa, k, signs=sigma_signs):
    """Signature(ε_k, φ_k, ẽ_k, f̃_k) on 𝒦_λ.

    k < 0 acts on P, k > 0 on Q ⊗ V by the upper rule, k = 0 by the σ rule.
    """
    if k == 0:
        e = apply_kappa_zero(E, kappa, signs)
        f = apply_kappa_zero(F, kappa, signs)
        return Signature(int(e is not None), int(f is not None), e, f)
    if k < 0:
        pd = tableau_crystal(kappa.p, k, COLUMNS)

        def _with_p(p):
            return None if p is None else KappaElement(p, kappa.q, kappa.v, kappa.ell, kappa.mu, kappa.eta)
        return Signature(pd.eps, pd.phi, _with_p(pd.e), _with_p(pd.f))

    qd = tableau_crystal(kappa.q, k, COLUMNS)
    vd = tableau_crystal(kappa.v, k, COLUMNS)
    first, second = (qd.eps, qd.phi), (vd.eps, vd.phi)
    eps, phi = tensor_counts(first, second, upper=True)

    def _build(which, q, v):
        if which is None:
            return None
        if which == 0:
            return KappaElement(kappa.p, q, kappa.v, kappa.ell, kappa.mu, kappa.eta)
        return KappaElement(kappa.p, kappa.q, v, kappa.ell, kappa.mu, kappa.eta)

    return Signature(
        eps, phi,
        _build(tensor_pair(first, second, E, upper=True), qd.e, vd.e),
        _build(tensor_pair(first, second, F, upper=True), qd.f, vd.f),
    )


def apply_kappa(k, direction, kappa, signs=sigma_signs):
    check_direction(direction)
    data = kappa_signature(kappa, k, signs)
    return data.e if direction == E else data.f


class KappaCrystal:
    """𝒦_λ = ⊔_{η⊆μ} SST_{𝓑₊∨}((ℓ^m)/η) × SST_{𝓑₋}(μ/η) × SST_{𝓑₋}(ν)."""

    def __init__(self, rank, lam, ell=None, strict=True, signs=sigma_signs):
        self.rank = rank
        self.lam = lam
        self.ell, self.mu, self.nu = kappa_window(rank, lam, ell, strict)
        self.signs = signs

    @property
    def colors(self):
        return self.rank.colors

    def e(self, k, kappa):
        return apply_kappa(k, E, kappa, self.signs)

    def f(self, k, kappa):
        return apply_kappa(k, F, kappa, self.signs)

    def weight(self, kappa):
        return kappa.weight(self.rank)

    def elements(self):
        m, n = self.rank.m, self.rank.n
        vs = enumerate_sst(SkewShape.straight(self.nu), B_MINUS, m, n)
        result = []
        for eta in partitions_inside(self.mu):
            ps = enumerate_sst(SkewShape.rectangle(self.ell, m, eta), B_DUAL, m, n)
            qs = enumerate_sst(SkewShape(self.mu, eta), B_MINUS, m, n)
            for p, q, v in product(ps, qs, vs):
                result.append(KappaElement(p, q, v, self.ell, self.mu, normalize_partition(eta)))
        return result
