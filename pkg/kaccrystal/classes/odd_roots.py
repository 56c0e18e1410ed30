from dataclasses import dataclass
from functools import lru_cache

from .errors import ColorOutOfRange
from .weights import Weight
from .word_crystal import E, F, Signature, bracket, bracket_counts, check_direction


PREC = 'prec'
PREC1 = 'prec1'
PREC2 = 'prec2'
ORDERS = (PREC, PREC1, PREC2)

_SORT_KEYS = {
    PREC: lambda root: (root[1], root[0]),
    PREC1: lambda root: (root[0], -root[1]),
    PREC2: lambda root: (root[0], root[1]),
}


@dataclass(frozen=True)
class OddRootSet:
    """A subset S of the negative odd roots −ε_ī+ε_j, as an m×n bit matrix.

    Bit (i−1)·n + (j−1) of `bits` is set iff −ε_ī+ε_j ∈ S; roots are handled
    as pairs (i, j).
    """
    m: int
    n: int
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >= 1 << (self.m * self.n):
            raise ValueError(f"bits {self.bits} do not fit a {self.m}x{self.n} matrix")

    @classmethod
    def from_roots(cls, m, n, roots):
        bits = 0
        for i, j in roots:
            if not (1 <= i <= m and 1 <= j <= n):
                raise ValueError(f"root ({i}, {j}) is not a negative odd root for ({m}|{n})")
            bits |= 1 << cls._bit(n, i, j)
        return cls(m, n, bits)

    @classmethod
    def from_matrix(cls, matrix):
        m, n = len(matrix), len(matrix[0]) if matrix else 0
        return cls.from_roots(m, n, [
            (i + 1, j + 1) for i, row in enumerate(matrix) for j, a in enumerate(row) if a
        ])

    @staticmethod
    def _bit(n, i, j):
        return (i - 1) * n + (j - 1)

    def __contains__(self, root):
        i, j = root
        return bool(self.bits >> self._bit(self.n, i, j) & 1)

    def __len__(self):
        return bin(self.bits).count('1')

    def roots(self):
        return [(i, j) for i in range(1, self.m + 1) for j in range(1, self.n + 1) if (i, j) in self]

    def matrix(self):
        return [[1 if (i, j) in self else 0 for j in range(1, self.n + 1)] for i in range(1, self.m + 1)]

    def add(self, root):
        return OddRootSet(self.m, self.n, self.bits | 1 << self._bit(self.n, *root))

    def remove(self, root):
        return OddRootSet(self.m, self.n, self.bits & ~(1 << self._bit(self.n, *root)))

    def weight(self, rank):
        coords = [0] * rank.dimension
        for i, j in self.roots():
            coords[rank.position(-i)] -= 1
            coords[rank.position(j)] += 1
        return Weight(rank, coords)


def sort_roots(s, order=PREC):
    """Roots of `s` as (i, j) pairs sorted by ≺, ≺′ or ≺″.

    ≺: ascending j, then ascending i. ≺′: ascending i, then descending j.
    ≺″: ascending i, then ascending j.
    """
    if order not in _SORT_KEYS:
        raise ValueError(f"Unknown root order '{order}'. Choose from: {list(ORDERS)}")
    return sorted(s.roots(), key=_SORT_KEYS[order])


def root_signature(root, k):
    """(ε_k, φ_k) of a single root for k ≠ 0."""
    i, j = root
    if k < 0:
        p = -k
        return (1 if i == p + 1 else 0, 1 if i == p else 0)
    return (1 if j == k + 1 else 0, 1 if j == k else 0)


def root_action(root, k, direction):
    i, j = root
    step = 1 if direction == F else -1
    if k < 0:
        return (i + step, j)
    return (i, j + step)


def _act(s, k, direction, roots):
    signs = [root_signature(root, k) for root in roots]
    pos = bracket(signs, direction, upper=k > 0)
    if pos is None:
        return None
    new = root_action(roots[pos], k, direction)
    if new in s:
        raise AssertionError(f"odd-root operator produced a repeated root {new}")
    return s.remove(roots[pos]).add(new)


@lru_cache(maxsize=None)
def odd_root_crystal(s, k):
    """Signature(ε_k, φ_k, ẽ_k S, f̃_k S)."""
    if k == 0:
        if (1, 1) in s:
            return Signature(1, 0, s.remove((1, 1)), None)
        return Signature(0, 1, None, s.add((1, 1)))
    roots = sort_roots(s, PREC if k < 0 else PREC1)
    eps, phi = bracket_counts([root_signature(root, k) for root in roots], upper=k > 0)
    e = _act(s, k, E, roots) if eps else None
    f = _act(s, k, F, roots) if phi else None
    return Signature(eps, phi, e, f)


def apply_odd_root_set(k, direction, s):
    """ẽ_k / f̃_k on an odd-root set.

    k = 0 removes (ẽ) or adds (f̃) −α_0 = −ε_1̄+ε_1. Other colors use the
    signature rule over the roots sorted by ≺ (k < 0, lower rule) or
    ≺′ (k > 0, upper rule).
    """
    check_direction(direction)
    if not -(s.m - 1) <= k <= s.n - 1:
        raise ColorOutOfRange(f"color {k} is not in I for rank ({s.m}|{s.n})")
    data = odd_root_crystal(s, k)
    return data.e if direction == E else data.f
