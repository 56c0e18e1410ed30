from dataclasses import dataclass
from functools import lru_cache

from .errors import ShapeViolation


def normalize_partition(p):
    """Tuple form of a partition with trailing zeros removed.

    Raises
    ------
    ShapeViolation if `p` is not weakly decreasing and non-negative.
    """
    p = tuple(int(x) for x in p)
    if any(x < 0 for x in p):
        raise ShapeViolation(f"negative part in partition {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ShapeViolation(f"partition {p} is not weakly decreasing")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def is_partition(p):
    try:
        normalize_partition(p)
    except ShapeViolation:
        return False
    return True


@lru_cache(maxsize=None)
def conjugate(p):
    p = normalize_partition(p)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > c) for c in range(p[0]))


def contains(outer, inner):
    outer, inner = tuple(outer), tuple(inner)
    if len(inner) > len(outer) and any(inner[len(outer):]):
        return False
    return all(inner[i] <= outer[i] for i in range(min(len(inner), len(outer))))


def is_hook_partition(mu, m, n):
    """True iff `mu` lies in the (m|n)-hook, i.e. mu_{m+1} <= n."""
    mu = normalize_partition(mu)
    return len(mu) <= m or mu[m] <= n


def pad(p, length):
    p = tuple(p)
    return p + (0,) * (length - len(p))


def partitions_in_box(rows, cols):
    """All partitions with at most `rows` parts, each at most `cols`."""
    result = []

    def _extend(prefix, bound):
        result.append(tuple(prefix))
        if len(prefix) == rows:
            return
        for part in range(min(bound, cols), 0, -1):
            _extend(prefix + [part], part)

    _extend([], cols)
    return sorted(result, key=lambda p: (sum(p), p))


def partitions_inside(outer):
    """All partitions contained in `outer`."""
    outer = normalize_partition(outer)
    result = []

    def _extend(prefix):
        r = len(prefix)
        result.append(tuple(prefix))
        if r == len(outer):
            return
        bound = outer[r] if r == 0 else min(outer[r], prefix[-1])
        for part in range(bound, 0, -1):
            _extend(prefix + [part])

    _extend([])
    return sorted(result, key=lambda p: (sum(p), p))


@dataclass(frozen=True)
class SkewShape:
    """A skew shape outer/inner in matrix coordinates.

    Anti-normal shapes are stored as (ell^m)/eta with `antinormal=True`; the
    rectangle is `outer` and eta is `inner`.
    """
    outer: tuple
    inner: tuple = ()
    antinormal: bool = False

    def __post_init__(self):
        outer = tuple(int(x) for x in self.outer)
        if not self.antinormal:
            outer = normalize_partition(outer)
        elif len(set(outer)) > 1:
            raise ShapeViolation(f"anti-normal shape needs a rectangle, got {outer}")
        inner = normalize_partition(self.inner)
        if len(inner) > len(outer) or not contains(outer, inner):
            raise ShapeViolation(f"inner {inner} is not contained in outer {outer}")
        object.__setattr__(self, 'outer', outer)
        object.__setattr__(self, 'inner', pad(inner, len(outer)))

    @classmethod
    def straight(cls, p):
        return cls(normalize_partition(p))

    @classmethod
    def rectangle(cls, ell, m, inner=()):
        return cls((ell,) * m if ell > 0 else (0,) * m, inner, True)

    @property
    def rows(self):
        return len(self.outer)

    @property
    def width(self):
        return self.outer[0] if self.outer else 0

    @property
    def size(self):
        return sum(self.outer) - sum(self.inner)

    def row_range(self, r):
        return range(self.inner[r], self.outer[r])

    def row_length(self, r):
        return self.outer[r] - self.inner[r]

    def __contains__(self, cell):
        r, c = cell
        return 0 <= r < self.rows and self.inner[r] <= c < self.outer[r]

    def cells(self):
        return [(r, c) for r in range(self.rows) for c in self.row_range(r)]

    def column_rows(self, c):
        return [r for r in range(self.rows) if self.inner[r] <= c < self.outer[r]]

    def inner_partition(self):
        return normalize_partition(self.inner)

    def to_dict(self):
        return {
            'outer': list(self.outer),
            'inner': list(normalize_partition(self.inner)),
            'antinormal': self.antinormal,
        }
