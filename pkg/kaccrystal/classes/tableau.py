import operator
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InsertionOverflow, NotInImage, ShapeViolation, WeightFormatError
from .shapes import SkewShape, conjugate, normalize_partition
from .weights import Weight


B = 'B'
B_PLUS = 'B+'
B_MINUS = 'B-'
B_DUAL = 'B+dual'
ALPHABETS = (B, B_PLUS, B_MINUS, B_DUAL)

COLUMNS = 'columns'
ROWS = 'rows'
READINGS = (COLUMNS, ROWS)


def check_alphabet(alphabet):
    if alphabet not in ALPHABETS:
        raise ValueError(f"Unknown alphabet '{alphabet}'. Choose from: {list(ALPHABETS)}")
    return alphabet


def alphabet_letters(alphabet, m, n):
    """Letter codes of an alphabet in increasing order."""
    if alphabet == B:
        return tuple(range(-m, 0)) + tuple(range(1, n + 1))
    if alphabet == B_PLUS:
        return tuple(range(-m, 0))
    if alphabet == B_MINUS:
        return tuple(range(1, n + 1))
    if alphabet == B_DUAL:
        return tuple(range(1, m + 1))
    check_alphabet(alphabet)


def is_even(code, alphabet):
    return alphabet == B_DUAL or code < 0


class Letter(tuple):
    """A letter as (kind, index) with kind `barred`, `unbarred` or `dual`.

    `code` is the signed integer used inside tableaux: ī ↦ −i, j ↦ j, ī∨ ↦ i.
    """
    kind = property(operator.itemgetter(0))
    index = property(operator.itemgetter(1))

    BARRED = 'barred'
    UNBARRED = 'unbarred'
    DUAL = 'dual'

    def __new__(cls, kind, index):
        if kind not in (cls.BARRED, cls.UNBARRED, cls.DUAL):
            raise ValueError(f"Unknown letter kind '{kind}'")
        if not isinstance(index, int) or index < 1:
            raise ValueError(f"letter index must be a positive integer, got {index!r}")
        return tuple.__new__(cls, (kind, index))

    @classmethod
    def from_code(cls, code, alphabet):
        if alphabet == B_DUAL:
            return cls(cls.DUAL, code)
        return cls(cls.BARRED, -code) if code < 0 else cls(cls.UNBARRED, code)

    @classmethod
    def parse(cls, text):
        text = text.strip()
        try:
            if text.startswith('b'):
                return cls(cls.BARRED, int(text[1:]))
            if text.startswith('d'):
                return cls(cls.DUAL, int(text[1:]))
            return cls(cls.UNBARRED, int(text))
        except ValueError:
            raise WeightFormatError("malformed letter", text, 0) from None

    @property
    def code(self):
        return -self.index if self.kind == self.BARRED else self.index

    @property
    def parity(self):
        return 1 if self.kind == self.UNBARRED else 0

    def __str__(self):
        prefix = {self.BARRED: 'b', self.UNBARRED: '', self.DUAL: 'd'}[self.kind]
        return f"{prefix}{self.index}"


_KINDS = {
    B: (Letter.BARRED, Letter.UNBARRED),
    B_PLUS: (Letter.BARRED,),
    B_MINUS: (Letter.UNBARRED,),
    B_DUAL: (Letter.DUAL,),
}


@dataclass(frozen=True)
class Tableau:
    """A filling of a (skew or anti-normal) shape by letter codes.

    `rows[r]` lists the codes of the cells inner[r], …, outer[r]−1 of row r.
    """
    alphabet: str
    shape: SkewShape
    rows: tuple

    def __post_init__(self):
        check_alphabet(self.alphabet)
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        if len(rows) != self.shape.rows:
            raise ShapeViolation(f"tableau has {len(rows)} rows, shape has {self.shape.rows}")
        for r, row in enumerate(rows):
            if len(row) != self.shape.row_length(r):
                raise ShapeViolation(
                    f"row {r} has {len(row)} cells, shape allows {self.shape.row_length(r)}"
                )
        object.__setattr__(self, 'rows', rows)

    @classmethod
    def straight(cls, alphabet, rows):
        rows = tuple(tuple(row) for row in rows)
        return cls(alphabet, SkewShape.straight([len(row) for row in rows]), rows)

    @classmethod
    def empty(cls, alphabet, shape=None):
        shape = shape or SkewShape(())
        return cls(alphabet, shape, tuple(() for _ in range(shape.rows)))

    @classmethod
    def from_cells(cls, alphabet, shape, cells):
        """Build from a {(row, col): code} mapping covering the shape exactly."""
        extra = [cell for cell in cells if cell not in shape]
        if extra:
            raise ShapeViolation(f"cell {extra[0]} lies outside shape {shape}")
        if len(cells) != shape.size:
            raise ShapeViolation(f"{len(cells)} cells given for a shape of size {shape.size}")
        rows = tuple(tuple(cells[(r, c)] for c in shape.row_range(r)) for r in range(shape.rows))
        return cls(alphabet, shape, rows)

    def __getitem__(self, cell):
        r, c = cell
        if cell not in self.shape:
            raise KeyError(cell)
        return self.rows[r][c - self.shape.inner[r]]

    def __len__(self):
        return self.shape.size

    def items(self):
        return [((r, c), self.rows[r][c - self.shape.inner[r]]) for r, c in self.shape.cells()]

    def cells(self):
        return dict(self.items())

    def column(self, c):
        """(row, code) pairs of column c, top to bottom."""
        return [(r, self.rows[r][c - self.shape.inner[r]]) for r in self.shape.column_rows(c)]

    @property
    def codes(self):
        return tuple(x for row in self.rows for x in row)

    def with_cells(self, updates):
        cells = self.cells()
        cells.update(updates)
        return Tableau.from_cells(self.alphabet, self.shape, cells)

    def weight(self, rank):
        coords = [0] * rank.dimension
        sign = -1 if self.alphabet == B_DUAL else 1
        for x in self.codes:
            index = -x if self.alphabet == B_DUAL else x
            coords[rank.position(index)] += sign
        return Weight(rank, coords)

    def to_dict(self):
        return {
            'alphabet': self.alphabet,
            'outer': list(self.shape.outer),
            'inner': list(self.shape.inner),
            'antinormal': self.shape.antinormal,
            'rows': [[str(Letter.from_code(x, self.alphabet)) for x in row] for row in self.rows],
        }

    @classmethod
    def from_dict(cls, data):
        alphabet = check_alphabet(data['alphabet'])
        shape = SkewShape(tuple(data['outer']), tuple(data.get('inner', ())), bool(data.get('antinormal', False)))
        rows = []
        for row in data['rows']:
            letters = [Letter.parse(text) for text in row]
            for x in letters:
                if x.kind not in _KINDS[alphabet]:
                    raise ShapeViolation(f"letter {x} does not belong to alphabet {alphabet}")
            rows.append([x.code for x in letters])
        rows += [[] for _ in range(shape.rows - len(rows))]
        return cls(alphabet, shape, rows)

    def __str__(self):
        return ' / '.join(
            ' '.join(str(Letter.from_code(x, self.alphabet)) for x in row) or '.'
            for row in self.rows
        )


def validate(t, rank=None):
    """Semistandardness of `t` for its alphabet's grading.

    Parameters
    ----------
    t : Tableau
    rank : optional Rank; when given, letters are also range-checked

    Returns
    -------
    True iff rows and columns weakly increase, even letters strictly increase
    down columns and odd letters strictly increase along rows.
    """
    alphabet = t.alphabet
    cells = t.cells()
    if rank is not None:
        allowed = set(alphabet_letters(alphabet, rank.m, rank.n))
    else:
        allowed = None
    for (r, c), x in cells.items():
        if allowed is not None and x not in allowed:
            return False
        if allowed is None and (x == 0 or (alphabet in (B_MINUS, B_DUAL) and x < 0)
                                or (alphabet == B_PLUS and x > 0)):
            return False
        right = cells.get((r, c + 1))
        if right is not None and (right < x or (right == x and not is_even(x, alphabet))):
            return False
        below = cells.get((r + 1, c))
        if below is not None and (below < x or (below == x and is_even(x, alphabet))):
            return False
    return True


@lru_cache(maxsize=None)
def reading_cells(shape, order=COLUMNS):
    """Cells of `shape` in an admissible reading order.

    `columns`: columns right to left, each top to bottom.
    `rows`: rows top to bottom, each right to left.
    """
    if order == COLUMNS:
        return tuple((r, c) for c in range(shape.width - 1, -1, -1) for r in shape.column_rows(c))
    if order == ROWS:
        return tuple((r, c) for r in range(shape.rows) for c in reversed(shape.row_range(r)))
    raise ValueError(f"Unknown reading order '{order}'. Choose from: {list(READINGS)}")


def reading_word(t, order=COLUMNS):
    cells = t.cells()
    return tuple(cells[cell] for cell in reading_cells(t.shape, order))


def _columns(t):
    cols = []
    for c in range(t.shape.width):
        cols.append([x for _, x in t.column(c)])
    return cols


def _from_columns(alphabet, cols):
    height = max((len(col) for col in cols), default=0)
    rows = [[col[r] for col in cols if len(col) > r] for r in range(height)]
    return Tableau.straight(alphabet, rows)


def column_insert(a, t):
    """Schensted column insertion a → t for a straight-shaped tableau.

    An even letter bumps the topmost entry ≥ it, an odd letter the topmost
    entry > it; the bumped letter moves one column to the right.
    """
    if t.shape.antinormal or any(t.shape.inner):
        raise ShapeViolation("column insertion needs a straight shape")
    cols = _columns(t)
    c = 0
    while True:
        if c == len(cols):
            cols.append([a])
            break
        col = cols[c]
        even = is_even(a, t.alphabet)
        pos = next((r for r, y in enumerate(col) if (y >= a if even else y > a)), None)
        if pos is None:
            col.append(a)
            break
        a, col[pos] = col[pos], a
        c += 1
    return _from_columns(t.alphabet, cols)


def insert_word(w, t=None, alphabet=B):
    """(w → T): insert w_1 first."""
    if t is None:
        t = Tableau.empty(alphabet)
    for a in w:
        t = column_insert(a, t)
    return t


def _occupied(inner, c):
    return [r for r in range(len(inner)) if inner[r] <= c]


def antinormal_insert(t, a):
    """T ← a on a shape (ell^m)/eta, starting from the rightmost column.

    Returns
    -------
    The new tableau and the (row, col) of the created cell.

    Raises
    ------
    InsertionOverflow if the bumping path leaves the rectangle.
    """
    shape = t.shape
    if not shape.antinormal:
        raise ShapeViolation("anti-normal insertion needs a rectangle shape")
    m, ell = shape.rows, shape.width
    cells = t.cells()
    inner = list(shape.inner)
    c = ell - 1
    while True:
        if c < 0:
            raise InsertionOverflow(f"inserting {a} bumps past the first column")
        occupied = _occupied(inner, c)
        even = is_even(a, t.alphabet)
        pos = None
        for r in reversed(occupied):
            y = cells[(r, c)]
            if (y <= a if even else y < a):
                pos = r
                break
        if pos is None:
            r = (occupied[0] if occupied else m) - 1
            if r < 0 or inner[r] != c + 1:
                raise InsertionOverflow(f"no room on top of column {c} for {a}")
            cells[(r, c)] = a
            inner[r] = c
            return Tableau.from_cells(t.alphabet, SkewShape.rectangle(ell, m, inner), cells), (r, c)
        a, cells[(pos, c)] = cells[(pos, c)], a
        c -= 1


def antinormal_uninsert(t, cell):
    """Reverse step of `antinormal_insert` from its created cell.

    Returns
    -------
    The tableau before insertion and the inserted letter.
    """
    shape = t.shape
    r, c = cell
    if cell not in shape or shape.inner[r] != c or (r > 0 and shape.inner[r - 1] <= c):
        raise NotInImage(f"cell {cell} is not a removable top cell of {shape}")
    m, ell = shape.rows, shape.width
    cells = t.cells()
    inner = list(shape.inner)
    x = cells.pop(cell)
    inner[r] = c + 1
    for col in range(c + 1, ell):
        pos = None
        for rr in _occupied(inner, col):
            y = cells[(rr, col)]
            if y > x or (y == x and is_even(y, t.alphabet)):
                pos = rr
                break
        if pos is None:
            raise NotInImage(f"reverse bumping of {x} finds no entry in column {col}")
        x, cells[(pos, col)] = cells[(pos, col)], x
    return Tableau.from_cells(t.alphabet, SkewShape.rectangle(ell, m, inner), cells), x


def insert_word_right(t, w):
    """(T ← w): insert w_r first, w_1 last. Returns the tableau and the
    created cells in insertion order."""
    created = []
    for a in reversed(tuple(w)):
        t, cell = antinormal_insert(t, a)
        created.append(cell)
    return t, created


@lru_cache(maxsize=None)
def enumerate_sst(shape, alphabet, m, n):
    """All semistandard fillings of `shape`, by brute-force backtracking.

    Cells are filled row by row, so each cell only checks its left and upper
    neighbours.
    """
    letters = alphabet_letters(alphabet, m, n)
    order = shape.cells()
    result = []
    cells = {}

    def _fill(k):
        if k == len(order):
            result.append(Tableau.from_cells(alphabet, shape, cells))
            return
        r, c = order[k]
        left = cells.get((r, c - 1))
        above = cells.get((r - 1, c))
        for x in letters:
            if left is not None and (x < left or (x == left and not is_even(x, alphabet))):
                continue
            if above is not None and (x < above or (x == above and is_even(x, alphabet))):
                continue
            cells[(r, c)] = x
            _fill(k + 1)
            del cells[(r, c)]

    _fill(0)
    return tuple(result)


def _hook_content(p, letters):
    p = normalize_partition(p)
    pc = conjugate(p)
    total = Fraction(1)
    for r, length in enumerate(p):
        for c in range(length):
            hook = length - c + pc[c] - r - 1
            total *= Fraction(letters + c - r, hook)
    return int(total)


def count_sst(shape, alphabet, m, n):
    """#SST(shape) by the hook-content formula.

    Supported: straight shapes over B+, B- and B+dual, and anti-normal
    shapes over B+dual (counted after a half-turn).
    """
    if alphabet == B:
        raise ValueError("count_sst has no closed formula for the mixed alphabet; use enumerate_sst")
    if shape.antinormal:
        rotated = tuple(shape.outer[r] - shape.inner[r] for r in reversed(range(shape.rows)))
        shape = SkewShape.straight(rotated)
    if any(shape.inner):
        raise ValueError("count_sst needs a straight or anti-normal shape")
    if alphabet == B_MINUS:
        return _hook_content(conjugate(shape.outer), n)
    return _hook_content(shape.outer, m)
