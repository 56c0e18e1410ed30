"""Worked instances used by the tests and the demo script."""
from ..classes.kac import KacElement
from ..classes.odd_roots import OddRootSet
from ..classes.shapes import SkewShape
from ..classes.tableau import B, B_DUAL, B_MINUS, B_PLUS, Tableau
from ..utils import parse_weight


# (3|3), λ = (4,3,2|3,1,0): one element and its images under ẽ_0, f̃_0, f̃_{−2}, f̃_2
OPERATOR_RANK = (3, 3)
OPERATOR_LAMBDA = "4,3,2|3,1,0"

OPERATOR_S = [(2, 1), (2, 2), (1, 3)]
OPERATOR_U = [[-3, -3, -3, -2], [-2, -2, -1], [-1, -1]]
OPERATOR_V = [[1, 3], [2], [2]]

OPERATOR_F0_S = [(1, 1), (2, 1), (2, 2), (1, 3)]
OPERATOR_F_MINUS_2_S = [(3, 1), (2, 2), (1, 3)]
OPERATOR_F2_V = [[1, 3], [2], [3]]


# (3|3), λ = (4,3,2|2,0,0), λ° = (4,3,2,1,1): a hook tableau and its image under ξ_λ
EMBED_RANK = (3, 3)
EMBED_LAMBDA = "4,3,2|2,0,0"
EMBED_SHAPE = (4, 3, 2, 1, 1)

EMBED_T = [[-3, -3, -2, -1], [-2, -1, 3], [1, 2], [1], [2]]

EMBED_T_PLUS = [[-3, -3, -2, -1], [-2, -1]]
EMBED_T_MINUS = [[], [3], [1, 2]]
EMBED_T_BELOW = [[1], [2]]
EMBED_ETA = (4, 2)

# σ⁻⁴(T⁺) on (4³)/(4,2)
EMBED_SIGMA = {(1, 2): 1, (1, 3): 2, (2, 0): 1, (2, 1): 2, (2, 2): 3, (2, 3): 3}

EMBED_XI_S = [(3, 1), (2, 2), (1, 3)]
EMBED_XI_U = [[-3, -3, -3, -2], [-2, -2, -1], [-1, -1]]
EMBED_XI_V = [[1], [2]]


# (1|2), λ = (0|1,0): the crystal of K(λ) has a vertex killed by every ẽ_k of weight ≠ λ
FAKE_RANK = (1, 2)
FAKE_LAMBDA = "0|1,0"
FAKE_S = [(1, 2)]
FAKE_T_MINUS = [[1]]


def operator_element():
    m, n = OPERATOR_RANK
    return KacElement(
        OddRootSet.from_roots(m, n, OPERATOR_S),
        Tableau.straight(B_PLUS, OPERATOR_U),
        Tableau.straight(B_MINUS, OPERATOR_V),
    )


def operator_lambda():
    return parse_weight(OPERATOR_LAMBDA)


def embed_tableau():
    return Tableau.straight(B, EMBED_T)


def embed_lambda():
    return parse_weight(EMBED_LAMBDA)


def embed_sigma():
    m, _ = EMBED_RANK
    return Tableau.from_cells(B_DUAL, SkewShape.rectangle(EMBED_SHAPE[0], m, EMBED_ETA), EMBED_SIGMA)


def embed_image():
    m, n = EMBED_RANK
    return KacElement(
        OddRootSet.from_roots(m, n, EMBED_XI_S),
        Tableau.straight(B_PLUS, EMBED_XI_U),
        Tableau.straight(B_MINUS, EMBED_XI_V),
    )


def fake_element():
    m, n = FAKE_RANK
    return KacElement(
        OddRootSet.from_roots(m, n, FAKE_S),
        Tableau.empty(B_PLUS),
        Tableau.straight(B_MINUS, FAKE_T_MINUS),
    )
