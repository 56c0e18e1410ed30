from collections import namedtuple
from dataclasses import dataclass
from functools import lru_cache

from .errors import ColorOutOfRange
from .tableau import B, B_DUAL, B_MINUS, B_PLUS, COLUMNS, Tableau, reading_cells


E = 'e'
F = 'f'
DIRECTIONS = (E, F)

Signature = namedtuple('Signature', ['eps', 'phi', 'e', 'f'])


def check_direction(direction):
    if direction not in DIRECTIONS:
        raise ValueError(f"Unknown direction '{direction}'. Choose from: {list(DIRECTIONS)}")
    return direction


def check_word_color(k, rank, alphabet=B):
    rank.check_color(k)
    if alphabet == B:
        return k
    if alphabet in (B_PLUS, B_DUAL) and k < 0:
        return k
    if alphabet == B_MINUS and k > 0:
        return k
    raise ColorOutOfRange(f"color {k} does not act on alphabet {alphabet}")


def letter_signature(x, k, alphabet=B):
    """(ε_k, φ_k) of a single letter for k ≠ 0."""
    if alphabet == B_DUAL:
        return (1 if x == -k + 1 else 0, 1 if x == -k else 0)
    if k < 0:
        return (1 if x == k else 0, 1 if x == k - 1 else 0)
    return (1 if x == k + 1 else 0, 1 if x == k else 0)


def letter_action(x, k, direction, alphabet=B):
    """ẽ_k or f̃_k on a single letter, following the chain
    m̄ → … → 1̄ → 1 → … → n (and 1̄∨ → … → m̄∨ on the dual alphabet)."""
    if k == 0:
        if direction == F:
            return 1 if x == -1 else None
        return -1 if x == 1 else None
    eps, phi = letter_signature(x, k, alphabet)
    if direction == F:
        if not phi:
            return None
        return x + 1
    if not eps:
        return None
    return x - 1


def bracket(signs, direction, upper=False):
    """Position acted on by the signature rule, or None.

    Each factor contributes −^ε +^φ; adjacent "+ −" pairs cancel. ẽ acts at
    the rightmost surviving −, f̃ at the leftmost surviving +. The upper rule
    is the same procedure on the reversed sequence.
    """
    if upper:
        last = len(signs) - 1
        pos = bracket(signs[::-1], direction)
        return None if pos is None else last - pos
    plus, minus = [], []
    for pos, (eps, phi) in enumerate(signs):
        for _ in range(eps):
            if plus:
                plus.pop()
            else:
                minus.append(pos)
        plus.extend([pos] * phi)
    if direction == E:
        return minus[-1] if minus else None
    return plus[0] if plus else None


def bracket_counts(signs, upper=False):
    """(ε, φ) of a tensor product from its factors' signatures."""
    if upper:
        signs = signs[::-1]
    plus = minus = 0
    for eps, phi in signs:
        cancelled = min(plus, eps)
        plus -= cancelled
        minus += eps - cancelled
        plus += phi
    return minus, plus


def tensor_pair(first, second, direction, upper=False):
    """Which factor of first ⊗ second an operator acts on: 0, 1 or None.

    `first` and `second` are (ε, φ) pairs.
    """
    (eps1, phi1), (eps2, phi2) = first, second
    if upper:
        # exchange the tensor positions and reuse the lower rule
        which = tensor_pair(second, first, direction)
        return None if which is None else 1 - which
    if direction == E:
        if phi1 >= eps2:
            return 0 if eps1 else None
        return 1
    if phi1 > eps2:
        return 0
    return 1 if phi2 else None


def tensor_counts(first, second, upper=False):
    if upper:
        first, second = second, first
    (eps1, phi1), (eps2, phi2) = first, second
    cancelled = min(phi1, eps2)
    return eps1 + eps2 - cancelled, phi1 + phi2 - cancelled


def _zero_position(w):
    return next((pos for pos, x in enumerate(w) if x in (-1, 1)), None)


def _word_position(k, direction, w, alphabet):
    if k == 0:
        pos = _zero_position(w)
        if pos is None or letter_action(w[pos], 0, direction) is None:
            return None
        return pos
    signs = [letter_signature(x, k, alphabet) for x in w]
    return bracket(signs, direction, upper=k > 0)


def apply(k, direction, w, rank, alphabet=B):
    """ẽ_k / f̃_k on a word w_1 ⊗ … ⊗ w_r.

    Parameters
    ----------
    k : color in I
    direction : `e` or `f`
    w : sequence of letter codes
    rank : Rank
    alphabet : one of `B`, `B+`, `B-`, `B+dual`

    Returns
    -------
    The new word as a tuple, or None.
    """
    check_direction(direction)
    check_word_color(k, rank, alphabet)
    w = tuple(w)
    pos = _word_position(k, direction, w, alphabet)
    if pos is None:
        return None
    return w[:pos] + (letter_action(w[pos], k, direction, alphabet),) + w[pos + 1:]


def word_signature(k, w, rank, alphabet=B):
    """(ε_k, φ_k) of a word."""
    check_word_color(k, rank, alphabet)
    if k == 0:
        pos = _zero_position(tuple(w))
        if pos is None:
            return 0, 0
        return (1, 0) if w[pos] == 1 else (0, 1)
    return bracket_counts([letter_signature(x, k, alphabet) for x in w], upper=k > 0)


def _replace(t, cell, x):
    r, c = cell
    rows = [list(row) for row in t.rows]
    rows[r][c - t.shape.inner[r]] = x
    return Tableau(t.alphabet, t.shape, rows)


def _tableau_action(t, k, direction, order):
    cells = reading_cells(t.shape, order)
    data = t.cells()
    w = tuple(data[cell] for cell in cells)
    pos = _word_position(k, direction, w, t.alphabet)
    if pos is None:
        return None
    return _replace(t, cells[pos], letter_action(w[pos], k, direction, t.alphabet))


def apply_tableau(k, direction, t, rank, order=COLUMNS):
    """Read `t` admissibly, apply the word operator and write the result back
    into the same cells."""
    check_direction(direction)
    check_word_color(k, rank, t.alphabet)
    return _tableau_action(t, k, direction, order)


@lru_cache(maxsize=None)
def tableau_crystal(t, k, order=COLUMNS):
    """Signature(ε_k, φ_k, ẽ_k t, f̃_k t) of a tableau; colors are not range
    checked here."""
    cells = reading_cells(t.shape, order)
    data = t.cells()
    w = [data[cell] for cell in cells]
    if k == 0:
        pos = _zero_position(w)
        eps, phi = (0, 0) if pos is None else ((1, 0) if w[pos] == 1 else (0, 1))
    else:
        eps, phi = bracket_counts([letter_signature(x, k, t.alphabet) for x in w], upper=k > 0)
    e = _tableau_action(t, k, E, order) if eps else None
    f = _tableau_action(t, k, F, order) if phi else None
    return Signature(eps, phi, e, f)


@dataclass(frozen=True)
class HighestWeight:
    vertex: int
    weight: object
    genuine: object


def highest_weight_elements(g):
    """Vertices killed by every ẽ_k, each flagged genuine (weight λ) or fake.

    Uses the graph's crystal operators when the graph carries them, its
    in-edges otherwise.
    """
    crystal = g.graph.get('crystal')
    lam = g.graph.get('lambda')
    colors = getattr(crystal, 'colors', None) or g.graph['rank'].colors
    result = []
    for v in g.nodes:
        if crystal is not None:
            x = g.element(v)
            killed = all(crystal.e(k, x) is None for k in colors)
        else:
            killed = g.in_degree(v) == 0
        if killed:
            wt = g.weight(v)
            result.append(HighestWeight(v, wt, None if lam is None else wt == lam))
    return result
