from itertools import product

from hypothesis import strategies as st

from kaccrystal.classes.kac import KacCrystal
from kaccrystal.classes.odd_roots import OddRootSet
from kaccrystal.classes.tableau import alphabet_letters
from kaccrystal.classes.weights import Rank
from kaccrystal.utils import parse_weight


def get_rank(text):
    m, n = (int(x) for x in text.split(','))
    return Rank(m, n)


def get_instance(rank_text, lam_text):
    rank = get_rank(rank_text)
    return rank, parse_weight(lam_text, rank)


def get_crystal(rank_text, lam_text, **kwargs):
    rank, lam = get_instance(rank_text, lam_text)
    return KacCrystal(rank, lam, **kwargs)


def all_words(rank, alphabet, length):
    letters = alphabet_letters(alphabet, rank.m, rank.n)
    return [w for size in range(length + 1) for w in product(letters, repeat=size)]


@st.composite
def words(draw, rank, alphabet, max_size=6):
    letters = alphabet_letters(alphabet, rank.m, rank.n)
    return tuple(draw(st.lists(st.sampled_from(letters), max_size=max_size)))


@st.composite
def partitions(draw, max_rows=4, max_part=4):
    parts = draw(st.lists(st.integers(min_value=0, max_value=max_part), max_size=max_rows))
    return tuple(sorted(parts, reverse=True))


@st.composite
def odd_root_sets(draw, m, n):
    return OddRootSet(m, n, draw(st.integers(min_value=0, max_value=(1 << (m * n)) - 1)))
