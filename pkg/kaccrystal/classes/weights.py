from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ColorOutOfRange, HookViolation, NotDominant, RankMismatch
from .shapes import conjugate, normalize_partition


@dataclass(frozen=True)
class Rank:
    """The pair (m|n) of gl(m|n).

    The graded index set [m|n] is stored as signed integers: the barred index
    i-bar is -i and the unbarred index j is j, so the integer order is the
    order m-bar < ... < 1-bar < 1 < ... < n.
    """
    m: int
    n: int

    def __post_init__(self):
        if not isinstance(self.m, int) or not isinstance(self.n, int):
            raise TypeError("rank entries must be integers")
        if self.m < 1 or self.n < 1:
            raise ValueError(f"rank ({self.m}|{self.n}) needs m >= 1 and n >= 1")

    def __str__(self):
        return f"({self.m}|{self.n})"

    @property
    def index_set(self):
        return tuple(range(-self.m, 0)) + tuple(range(1, self.n + 1))

    @property
    def colors(self):
        return tuple(range(-(self.m - 1), self.n))

    @property
    def even_colors(self):
        return tuple(range(-(self.m - 1), 0))

    @property
    def odd_colors(self):
        return tuple(range(1, self.n))

    @property
    def dimension(self):
        return self.m + self.n

    def position(self, a):
        """Coordinate slot of the index `a` in (λ_m̄,…,λ_1̄, λ_1,…,λ_n)."""
        if -self.m <= a <= -1:
            return self.m + a
        if 1 <= a <= self.n:
            return self.m + a - 1
        raise ValueError(f"index {a} is not in [{self.m}|{self.n}]")

    @staticmethod
    def parity(a):
        return 0 if a < 0 else 1

    def check_color(self, k):
        if k not in self.colors:
            raise ColorOutOfRange(f"color {k} is not in I for rank {self}")
        return k


@dataclass(frozen=True)
class Root:
    """The root ε_a − ε_b for indices a, b of [m|n]."""
    a: int
    b: int

    @classmethod
    def simple(cls, rank, k):
        rank.check_color(k)
        if k < 0:
            return cls(k - 1, k)
        if k == 0:
            return cls(-1, 1)
        return cls(k, k + 1)

    @classmethod
    def negative_odd(cls, i, j):
        """−ε_ī + ε_j."""
        return cls(j, -i)

    @property
    def is_odd(self):
        return Rank.parity(self.a) != Rank.parity(self.b)

    def weight(self, rank):
        return Weight.epsilon(rank, self.a) - Weight.epsilon(rank, self.b)


@dataclass(frozen=True)
class Weight:
    """Integer (or half-integer, for ρ) vector indexed by [m|n]."""
    rank: Rank
    coords: tuple

    def __post_init__(self):
        coords = tuple(self.coords)
        if len(coords) != self.rank.dimension:
            raise RankMismatch(
                f"weight of rank {self.rank} needs {self.rank.dimension} coordinates, got {len(coords)}"
            )
        object.__setattr__(self, 'coords', coords)

    @classmethod
    def zero(cls, rank):
        return cls(rank, (0,) * rank.dimension)

    @classmethod
    def epsilon(cls, rank, a):
        coords = [0] * rank.dimension
        coords[rank.position(a)] = 1
        return cls(rank, coords)

    @classmethod
    def from_parts(cls, rank, plus, minus):
        """Weight from (λ_m̄,…,λ_1̄) and (λ_1,…,λ_n)."""
        plus, minus = tuple(plus), tuple(minus)
        if len(plus) != rank.m or len(minus) != rank.n:
            raise RankMismatch(f"weight parts {plus}|{minus} do not fit rank {rank}")
        return cls(rank, plus + minus)

    @property
    def plus(self):
        return self.coords[:self.rank.m]

    @property
    def minus(self):
        return self.coords[self.rank.m:]

    def __getitem__(self, a):
        return self.coords[self.rank.position(a)]

    def _coerce(self, other):
        if isinstance(other, Root):
            other = other.weight(self.rank)
        if not isinstance(other, Weight):
            return None
        if other.rank != self.rank:
            raise RankMismatch(f"rank {self.rank} does not match rank {other.rank}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Weight(self.rank, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Weight(self.rank, tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self):
        return Weight(self.rank, tuple(-x for x in self.coords))

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return Weight(self.rank, tuple(scalar * x for x in self.coords))

    __rmul__ = __mul__

    def form(self, other):
        """The bilinear form (ε_a|ε_b) = (−1)^{|a|} δ_ab."""
        other = self._coerce(other)
        if other is None:
            raise TypeError("the form pairs two weights or roots")
        return sum(
            (x * y if Rank.parity(a) == 0 else -x * y)
            for a, x, y in zip(self.rank.index_set, self.coords, other.coords)
        )

    def pairing(self, k):
        """⟨h_k, λ⟩."""
        self.rank.check_color(k)
        if k < 0:
            return self[k - 1] - self[k]
        if k == 0:
            return self[-1] + self[1]
        return self[k] - self[k + 1]

    @property
    def parity(self):
        return sum(self.minus) % 2

    def is_dominant(self):
        plus, minus = self.plus, self.minus
        return all(plus[i] >= plus[i + 1] for i in range(len(plus) - 1)) and \
            all(minus[i] >= minus[i + 1] for i in range(len(minus) - 1))

    def is_hook_dominant(self):
        """Membership in P̃⁺: λ_m̄ ≥ … ≥ λ_1̄ ≥ λ′_1 ≥ λ′_2 ≥ … with λ′ the
        conjugate of (λ_1,…,λ_n)."""
        if not self.is_dominant() or any(x < 0 for x in self.coords):
            return False
        nu_conj = conjugate(self.minus)
        return not nu_conj or self.plus[-1] >= nu_conj[0]

    def __str__(self):
        return ','.join(str(x) for x in self.plus) + '|' + ','.join(str(x) for x in self.minus)


def weight_arith(a, b, op='+'):
    """Arithmetic on weights of one rank.

    Parameters
    ----------
    a : Weight
    b : Weight or Root
    op : one of `+`, `-`, `form`

    Returns
    -------
    A Weight for `+` and `-`, a number for `form`.
    """
    if op == '+':
        return a + b
    if op == '-':
        return a - b
    if op == 'form':
        return a.form(b)
    raise ValueError(f"Unknown operation '{op}'. Choose from: ['+', '-', 'form']")


def delta_plus(rank):
    return Weight.from_parts(rank, (1,) * rank.m, (0,) * rank.n)


def delta_minus(rank):
    return Weight.from_parts(rank, (0,) * rank.m, (-1,) * rank.n)


def delta(rank):
    return delta_plus(rank) + delta_minus(rank)


def positive_roots(rank, odd=None):
    idx = rank.index_set
    roots = [Root(a, b) for x, a in enumerate(idx) for b in idx[x + 1:]]
    if odd is None:
        return roots
    return [r for r in roots if r.is_odd == odd]


@lru_cache(maxsize=None)
def rho(rank):
    """Weyl vector ½Σ_{Φ⁺₀} α − ½Σ_{Φ⁺₁} β."""
    total = Weight(rank, (Fraction(0),) * rank.dimension)
    half = Fraction(1, 2)
    for root in positive_roots(rank):
        w = root.weight(rank)
        total = total + (-half if root.is_odd else half) * w
    return total


def is_typical(rank, lam):
    """True iff (α | λ+ρ) ≠ 0 for every odd positive root α.

    Raises
    ------
    NotDominant if `lam` is not in P⁺.
    """
    if not lam.is_dominant():
        raise NotDominant(f"weight {lam} is not dominant")
    shifted = lam + rho(rank)
    return all(root.weight(rank).form(shifted) != 0 for root in positive_roots(rank, odd=True))


def hook_bijection(rank, mu):
    """Map an (m|n)-hook partition μ to λ = (μ_1,…,μ_m | ν′_1,…,ν′_n) with
    ν_i = μ_{m+i}.
    """
    mu = normalize_partition(mu)
    m, n = rank.m, rank.n
    if len(mu) > m and mu[m] > n:
        raise HookViolation(f"partition {mu} has μ_{m + 1} = {mu[m]} > {n}")
    plus = tuple(mu[i] if i < len(mu) else 0 for i in range(m))
    nu_conj = conjugate(mu[m:])
    minus = tuple(nu_conj[j] if j < len(nu_conj) else 0 for j in range(n))
    return Weight.from_parts(rank, plus, minus)


def hook_bijection_inv(rank, lam):
    """Inverse of `hook_bijection` on P̃⁺."""
    if not lam.is_hook_dominant():
        raise NotDominant(f"weight {lam} is not in the hook-dominant cone")
    return normalize_partition(tuple(lam.plus) + conjugate(lam.minus))
