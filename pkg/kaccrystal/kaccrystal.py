from functools import lru_cache

from .classes import embedding, kac, rsk as rsk_bridge, verify as checks
from .classes.kac import DEFAULT_CAP, NORMAL
from .classes.weights import hook_bijection
from .utils import parse_rank, parse_weight, validate_rank_lambda


@lru_cache(maxsize=None)
def setup_crystal(rank, lam, model=NORMAL, ell=None):
    return kac.KacCrystal(rank, lam, model, ell)


def _instance(rank, lam):
    rank = parse_rank(rank)
    lam = parse_weight(lam, rank)
    validate_rank_lambda(rank, lam)
    return rank, lam


def crystal(rank, lam, cap=DEFAULT_CAP, threads=None, model=NORMAL, ell=None):
    """
    Crystal graph of the Kac module K(λ).

    Parameters
    ----------
    rank : a Rank or text such as "3,3"
    lam : a dominant Weight or text such as "4,3,2|3,1,0"
    cap : refuse to build crystals with more vertices, default `DEFAULT_CAP`;
        None disables the cap
    threads : worker threads for the breadth-first closure, default serial
    model : `normal` or `dual`, the realization of the even factor
    ell : rectangle width of the `dual` model

    Returns
    -------
    a CrystalGraph whose vertices carry KacElement and weight

    Raises
    ------
    SizeCapExceeded, NotDominant, WeightFormatError
    """
    rank, lam = _instance(rank, lam)
    return setup_crystal(rank, lam, model, ell).generate_graph(cap, threads)


def verify(rank, lam, checks_to_run=checks.DEFAULT_CHECKS, cap=DEFAULT_CAP, threads=None, backend=None,
           corrupt=False):
    """Run the named checks on one instance; returns a VerificationReport."""
    rank, lam = _instance(rank, lam)
    return checks.verify_instance(rank, lam, checks_to_run, cap, threads, backend, corrupt)


def embed(rank, tableau):
    """ξ_λ(T) with λ read off the shape of T."""
    rank = parse_rank(rank)
    lam = hook_bijection(rank, tableau.shape.outer)
    return embedding.xi(rank, lam, tableau)


def extract(rank, lam, b):
    """π̄_λ(b): the hook tableau embedded at b, or None."""
    rank, lam = _instance(rank, lam)
    return embedding.pi_bar(rank, lam, b)


def rsk(rank, lam, x, ell=None):
    rank, lam = _instance(rank, lam)
    return rsk_bridge.rho(rank, lam, x, ell)


def rsk_inverse(rank, lam, kappa):
    rank, lam = _instance(rank, lam)
    return rsk_bridge.rho_inv(rank, lam, kappa)
