import json
import re
import warnings

from .classes.errors import NotDominant, RankMismatch, WeightFormatError
from .classes.weights import Rank, Weight


_INT = re.compile(r'\s*(-?\d+)\s*$')


def _parse_ints(text, offset=0):
    """Comma-separated integers; errors report the offset of the bad token."""
    values = []
    position = offset
    for token in text.split(','):
        match = _INT.match(token)
        if match is None:
            raise WeightFormatError("expected an integer", token, position)
        values.append(int(match.group(1)))
        position += len(token) + 1
    return values


def parse_rank(text):
    """
    Parse a rank written `m,n` or `m|n`.

    Returns
    -------
    A Rank
    """
    if isinstance(text, Rank):
        return text
    values = _parse_ints(str(text).replace('|', ','))
    if len(values) != 2:
        raise WeightFormatError("a rank needs exactly two entries", text, 0)
    try:
        return Rank(*values)
    except ValueError as e:
        raise WeightFormatError(str(e), text, 0) from None


def parse_weight(text, rank=None):
    """
    Parse a weight written `λ_m̄,…,λ_1̄|λ_1,…,λ_n`, e.g. "4,3,2|3,1,0".

    Parameters
    ----------
    text : the weight string
    rank : optional Rank; when omitted it is read off the two parts

    Returns
    -------
    A Weight

    Raises
    ------
    WeightFormatError with the character position of the offending token,
    RankMismatch if the parts do not fit `rank`.
    """
    if isinstance(text, Weight):
        return text
    if text.count('|') != 1:
        raise WeightFormatError("a weight needs exactly one '|'", text, text.find('|') if '|' in text else len(text))
    barred, unbarred = text.split('|')
    plus = _parse_ints(barred)
    minus = _parse_ints(unbarred, len(barred) + 1)
    if rank is None:
        try:
            rank = Rank(len(plus), len(minus))
        except ValueError as e:
            raise WeightFormatError(str(e), text, 0) from None
    if len(plus) != rank.m or len(minus) != rank.n:
        raise RankMismatch(f"weight {text!r} does not fit rank {rank}")
    return Weight.from_parts(rank, plus, minus)


def format_weight(lam):
    return str(lam)


def parse_partition(text):
    """Parse "4,3,2,1,1"; the empty string is the empty partition."""
    if isinstance(text, (tuple, list)):
        return tuple(text)
    if not text.strip():
        return ()
    return tuple(_parse_ints(text))


def validate_rank_lambda(rank, lam):
    """
    Check that `lam` is a dominant weight of `rank`.

    Raises
    ------
    RankMismatch, NotDominant
    """
    if lam.rank != rank:
        raise RankMismatch(f"weight {lam} is not of rank {rank}")
    if not lam.is_dominant():
        raise NotDominant(f"weight {lam} is not dominant")


def graph_to_dict(g):
    """JSON-ready form of a crystal graph: vertices in id order, edges as
    [source, color, target]."""
    vertices = []
    for v in sorted(g.nodes):
        entry = {'id': v, 'wt': format_weight(g.weight(v))}
        entry.update(g.element(v).to_dict())
        vertices.append(entry)
    rank = g.rank
    return {
        'rank': [rank.m, rank.n],
        'lambda': None if g.lam is None else format_weight(g.lam),
        'vertices': vertices,
        'edges': [list(edge) for edge in g.colored_edges()],
    }


def graph_to_json(g, indent=None):
    return json.dumps(graph_to_dict(g), indent=indent, ensure_ascii=False)


def graph_to_dot(g, name='crystal'):
    """Graphviz DOT text; vertices labeled by id, edges by color."""
    lines = [f'digraph {name} {{']
    for v in sorted(g.nodes):
        lines.append(f'  {v} [label="{v}"];')
    for u, k, v in g.colored_edges():
        lines.append(f'  {u} -> {v} [label="{k}"];')
    lines.append('}')
    return '\n'.join(lines) + '\n'


def raise_warn_narrow_rectangle(rank, lam, ell):
    """
    Issue a warning when the ρ rectangle is too narrow for every insertion.

    Args:
        rank: the rank (m|n).
        lam: the weight.
        ell: the rectangle width.
    """
    warnings.warn(
        f"ℓ={ell} gives ℓ+λ_1̄={ell + lam.plus[-1]} < n={rank.n} for λ={lam}; "
        "inserting a large odd-root set may overflow the rectangle",
        UserWarning,
    )


def raise_warn_skipped_instance(rank, lam, cardinality, cap):
    """
    Issue a warning when a sweep instance is skipped by the vertex cap.
    """
    warnings.warn(
        f"skipping {rank} λ={lam}: {cardinality} vertices exceed the cap of {cap}",
        UserWarning,
    )
