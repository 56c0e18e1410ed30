import random
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass, field
from itertools import product

from ..utils import format_weight, raise_warn_skipped_instance
from .crystal_graph import CrystalGraph
from .embedding import pi_bar, shift_kac_iso, xi
from .errors import NotIsomorphic, SizeCapExceeded
from .kac import DEFAULT_CAP, DUAL, KacCrystal, kac_signature
from .rsk import DOT, MINUS, KappaCrystal, rho, rho_inv, sigma_signs
from .shapes import SkewShape, is_hook_partition, partitions_in_box, partitions_inside
from .tableau import B, COLUMNS, ROWS, enumerate_sst
from .weights import Rank, Root, Weight, delta, hook_bijection, hook_bijection_inv
from .word_crystal import DIRECTIONS, E, highest_weight_elements, tableau_crystal


AXIOMS = 'axioms'
CONNECTED = 'connected'
CHARACTER = 'character'
RHO = 'rho'
COMPAT = 'compat'
READING = 'reading'
SHIFT = 'shift'
CHECKS = (AXIOMS, CONNECTED, CHARACTER, RHO, COMPAT, READING, SHIFT)
DEFAULT_CHECKS = (AXIOMS, CONNECTED, CHARACTER, RHO, COMPAT)

DEFAULT_RANKS = ((1, 1), (2, 1), (1, 2), (2, 2), (3, 2))
DEFAULT_RANGE = (-2, 4)
DEFAULT_SWEEP = 'default'


@dataclass
class CheckResult:
    name: str
    passed: bool
    witness: object = None
    counts: dict = field(default_factory=dict)
    ms: int = 0

    def to_dict(self, timing=False):
        return {
            'name': self.name,
            'pass': self.passed,
            'witness': self.witness,
            'counts': dict(self.counts),
            'ms': self.ms if timing else 0,
        }


@dataclass
class VerificationReport:
    """Check results for one instance (rank, λ, flags)."""
    rank: Rank
    lam: Weight
    flags: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    def extend(self, other):
        self.checks.extend(other.checks)
        return self

    def to_dict(self, timing=False):
        return {
            'instance': {
                'rank': [self.rank.m, self.rank.n],
                'lambda': format_weight(self.lam),
                'flags': dict(self.flags),
            },
            'checks': [check.to_dict(timing) for check in self.checks],
        }


@contextmanager
def _timer(result):
    start = time.perf_counter()
    yield result
    result.ms = int((time.perf_counter() - start) * 1000)


def _single(rank, lam, result, **flags):
    return VerificationReport(rank, lam, flags, [result])


def _edge_ok(g, crystal, u, k, v):
    if g.weight(v) != g.weight(u) - Root.simple(g.rank, k).weight(g.rank):
        return False
    if crystal is None:
        return True
    x, y = g.element(u), g.element(v)
    return crystal.f(k, x) == y and crystal.e(k, y) == x


def check_axioms(g):
    """
    Crystal axioms on a finite colored graph.

    Every edge u →ᵏ v must satisfy wt(v) = wt(u) − α_k and, when the graph
    carries its crystal, f̃_k u = v ⟺ ẽ_k v = u. Every vertex has at most one
    in- and one out-edge per color and, with the crystal at hand, the graph is
    closed under every ẽ_k and f̃_k.
    """
    crystal = g.crystal
    result = CheckResult(AXIOMS, True, counts={'vertices': g.number_of_nodes(), 'edges': g.number_of_edges()})
    with _timer(result):
        for u, k, v in g.colored_edges():
            if not _edge_ok(g, crystal, u, k, v):
                result.passed, result.witness = False, [u, k, v]
                return _single(g.rank, g.lam, result)
        for v in sorted(g.nodes):
            if any(c > 1 for c in g.out_colors(v).values()) or any(c > 1 for c in g.in_colors(v).values()):
                result.passed, result.witness = False, v
                return _single(g.rank, g.lam, result)
        if crystal is not None:
            colors = getattr(crystal, 'colors', g.rank.colors)
            for v in sorted(g.nodes):
                x = g.element(v)
                for k in colors:
                    y, z = crystal.f(k, x), crystal.e(k, x)
                    if (y is None) != (g.f_target(v, k) is None) or (z is None) != (g.e_target(v, k) is None):
                        result.passed, result.witness = False, v
                        return _single(g.rank, g.lam, result)
    return _single(g.rank, g.lam, result)


def check_connected(g, backend=None):
    """One weakly connected component, with a census of ẽ-killed vertices."""
    result = CheckResult(CONNECTED, True)
    with _timer(result):
        components = g.components(backend)
        sources = highest_weight_elements(g)
        fake = [hw for hw in sources if hw.genuine is False]
        result.counts = {
            'vertices': g.number_of_nodes(),
            'components': len(components),
            'highest_weight': len(sources),
            'fake': len(fake),
            'fake_vertices': [hw.vertex for hw in fake],
        }
        if len(components) != 1:
            result.passed = False
            result.witness = components[1][0] if len(components) > 1 else None
    return _single(g.rank, g.lam, result)


def character_oracle(rank, lam):
    """Weight multiset of 𝒫(Φ⁻₁) × SST(λ₊) × SST(λ₋) from brute-force
    enumeration of each factor."""
    crystal = KacCrystal(rank, lam)
    roots = Counter(s.weight(rank) for s in crystal.odd_root_sets())
    plus = Counter(crystal.plus.weight(t) for t in crystal.plus.elements())
    minus = Counter(crystal.minus.weight(t) for t in crystal.minus.elements())
    total = Counter()
    for (a, x), (b, y), (c, z) in product(roots.items(), plus.items(), minus.items()):
        total[a + b + c] += x * y * z
    return total


def check_character(g, rank=None, lam=None):
    """Vertex count and weight multiset against the factorwise oracle."""
    rank = rank or g.rank
    lam = lam or g.lam
    result = CheckResult(CHARACTER, True)
    with _timer(result):
        expected = character_oracle(rank, lam)
        found = g.weights()
        result.counts = {'vertices': g.number_of_nodes(), 'expected': sum(expected.values())}
        if found != expected:
            result.passed = False
            for wt in sorted(set(found) | set(expected), key=str):
                if found[wt] != expected[wt]:
                    result.witness = {'wt': format_weight(wt), 'found': found[wt], 'expected': expected[wt]}
                    break
    return _single(rank, lam, result)


def corrupted_sigma_signs(kappa):
    """σ rule with every − read as ·, so ẽ_0 never acts."""
    return [DOT if sign == MINUS else sign for sign in sigma_signs(kappa)]


def bijection_witness(images, target=None):
    """The first collision in `images`, else the first element of `target`
    missed or overshot; None when `images` is a bijection onto `target`."""
    seen = {}
    for x, y in images.items():
        if y in seen:
            return {'collision': [seen[y].to_dict(), x.to_dict()], 'image': y.to_dict()}
        seen[y] = x
    if target is None:
        return None
    target = list(target)
    missing = next((y for y in target if y not in seen), None)
    if missing is not None:
        return {'missing': missing.to_dict()}
    expected = set(target)
    outside = next((x for x, y in images.items() if y not in expected), None)
    if outside is not None:
        return {'outside': outside.to_dict()}
    return None


def _rho_witness(x, k=None, direction=None):
    return {'element': x.to_dict(), 'color': k, 'direction': direction}


def check_rho_commutation(rank, lam, ell=None, corrupt=False):
    """
    ρ_λ against the dual model of K(λ): round trip, weight, bijectivity onto
    𝒦_λ and commutation with every ẽ_k, f̃_k (nulls matching).

    Parameters
    ----------
    corrupt : use `corrupted_sigma_signs` on 𝒦_λ (negative control)
    """
    domain = KacCrystal(rank, lam, model=DUAL, ell=ell)
    target = KappaCrystal(rank, lam, domain.ell, signs=corrupted_sigma_signs if corrupt else sigma_signs)
    result = CheckResult(RHO, True)
    flags = {'ell': domain.ell, 'corrupt': corrupt}
    with _timer(result):
        elements = domain.elements()
        image = {}
        for x in elements:
            y = rho(rank, lam, x, domain.ell)
            if rho_inv(rank, lam, y) != x or y.weight(rank) != domain.weight(x):
                result.passed, result.witness = False, _rho_witness(x)
                break
            image[x] = y
        kappa = target.elements()
        result.counts = {'domain': len(elements), 'kappa': len(set(kappa)), 'image': len(set(image.values()))}
        if result.passed:
            witness = bijection_witness(image, kappa)
            if witness is not None:
                result.passed, result.witness = False, witness
        if result.passed:
            for x in elements:
                for k in rank.colors:
                    data = kac_signature(x, k)
                    for direction, a in zip(DIRECTIONS, (data.e, data.f)):
                        b = target.e(k, image[x]) if direction == E else target.f(k, image[x])
                        if (a is None) != (b is None) or (a is not None and image.get(a) != b):
                            result.passed, result.witness = False, _rho_witness(x, k, direction)
                            return _single(rank, lam, result, **flags)
    return _single(rank, lam, result, **flags)


def _tableau_op(t, k, direction, order=COLUMNS):
    data = tableau_crystal(t, k, order)
    return data.e if direction == E else data.f


def check_compatibility(rank, lam, cap=DEFAULT_CAP):
    """
    ξ_λ on SST_𝓑(λ°): injective, weight preserving, intertwining every
    x̃_k where x̃_k T ≠ null, inverted by π̄_λ; the π̄_λ-image of K(λ) has
    #SST_𝓑(λ°) elements.
    """
    shape = hook_bijection_inv(rank, lam)
    crystal = KacCrystal(rank, lam)
    result = CheckResult(COMPAT, True)
    with _timer(result):
        domain = enumerate_sst(SkewShape.straight(shape), B, rank.m, rank.n)
        images = {t: xi(rank, lam, t) for t in domain}
        result.counts = {'sst': len(domain), 'image': len(set(images.values()))}
        for t, b in images.items():
            if crystal.weight(b) != t.weight(rank) or pi_bar(rank, lam, b) != t:
                result.passed, result.witness = False, {'tableau': t.to_dict()}
                return _single(rank, lam, result)
        witness = bijection_witness(images)
        if witness is not None:
            result.passed, result.witness = False, witness
            return _single(rank, lam, result)
        for t, b in images.items():
            for k in rank.colors:
                data = kac_signature(b, k)
                for direction, expected in zip(DIRECTIONS, (data.e, data.f)):
                    moved = _tableau_op(t, k, direction)
                    if moved is not None and images.get(moved) != expected:
                        result.passed = False
                        result.witness = {'tableau': t.to_dict(), 'color': k, 'direction': direction}
                        return _single(rank, lam, result)
        if crystal.cardinality() <= cap:
            hits = sum(1 for b in crystal.elements() if pi_bar(rank, lam, b) is not None)
            result.counts['pi_bar_image'] = hits
            if hits != len(domain):
                result.passed = False
    return _single(rank, lam, result)


def check_reading_independence(rank, lam):
    """Both admissible readings give the same ẽ_k, f̃_k on SST_𝓑(λ°)."""
    shape = hook_bijection_inv(rank, lam)
    result = CheckResult(READING, True)
    with _timer(result):
        domain = enumerate_sst(SkewShape.straight(shape), B, rank.m, rank.n)
        result.counts = {'sst': len(domain)}
        for t in domain:
            for k, direction in product(rank.colors, DIRECTIONS):
                if _tableau_op(t, k, direction, COLUMNS) != _tableau_op(t, k, direction, ROWS):
                    result.passed = False
                    result.witness = {'tableau': t.to_dict(), 'color': k, 'direction': direction}
                    return _single(rank, lam, result)
    return _single(rank, lam, result)


def check_shift(rank, lam, k, cap=DEFAULT_CAP, threads=None):
    """ς^k is a colored graph isomorphism 𝓑(K(λ)) → 𝓑(K(λ+kδ)) shifting
    weights by kδ."""
    result = CheckResult(SHIFT, True)
    with _timer(result):
        source = KacCrystal(rank, lam).generate_graph(cap, threads)
        target = KacCrystal(rank, lam + k * delta(rank)).generate_graph(cap, threads)
        result.counts = {'vertices': source.number_of_nodes(), 'target_vertices': target.number_of_nodes()}
        try:
            iso = shift_kac_iso(rank, lam, k)
        except NotIsomorphic as e:
            result.passed, result.witness = False, repr(e.edge)
            return _single(rank, lam, result, k=k)
        mapped = {}
        for v in source.nodes:
            y = iso(source.element(v))
            w = target.index.get(y)
            if w is None or target.weight(w) != source.weight(v) + iso.shift:
                result.passed, result.witness = False, v
                return _single(rank, lam, result, k=k)
            mapped[v] = w
        edges = sorted((mapped[u], c, mapped[v]) for u, c, v in source.colored_edges())
        if len(set(mapped.values())) != target.number_of_nodes() or edges != target.colored_edges():
            result.passed = False
    return _single(rank, lam, result, k=k)


def reversed_edge_graph(g, edge):
    """Copy of `g` with the edge (u, k, v) turned around."""
    u, k, v = edge
    h = CrystalGraph(g.rank, g.lam, g.crystal)
    for w in sorted(g.nodes):
        h.add_element(g.element(w), g.weight(w))
    for a, c, b in g.colored_edges():
        if (a, c, b) == (u, k, v):
            h.add_colored_edge(b, c, a)
        else:
            h.add_colored_edge(a, c, b)
    return h


def in_rho_window(lam):
    return lam.plus[0] < 0 and lam.minus[-1] > 0


def default_sweep(ranks=DEFAULT_RANKS, low=DEFAULT_RANGE[0], high=DEFAULT_RANGE[1]):
    """Dominant weights with coordinates in [low, high] for each rank."""
    instances = []
    for m, n in ranks:
        rank = Rank(m, n)
        width = high - low
        for plus in partitions_in_box(m, width):
            for minus in partitions_in_box(n, width):
                parts_plus = [x + low for x in plus] + [low] * (m - len(plus))
                parts_minus = [x + low for x in minus] + [low] * (n - len(minus))
                instances.append((rank, Weight.from_parts(rank, parts_plus, parts_minus)))
    return instances


def verify_instance(rank, lam, checks=DEFAULT_CHECKS, cap=DEFAULT_CAP, threads=None, backend=None,
                    corrupt=False):
    """
    Run `checks` on one instance and merge them into a single report.

    Checks that do not apply to λ (ρ outside its window, ξ outside the hook
    cone) are left out. With `corrupt`, the graph checks see a graph with one
    edge reversed and ρ uses the corrupted σ rule.

    Raises
    ------
    SizeCapExceeded when the graph is over the cap.
    """
    report = VerificationReport(rank, lam, {'corrupt': corrupt} if corrupt else {})
    if {AXIOMS, CONNECTED, CHARACTER} & set(checks):
        g = KacCrystal(rank, lam).generate_graph(cap, threads)
        if corrupt and g.number_of_edges():
            g = reversed_edge_graph(g, g.colored_edges()[0])
        if AXIOMS in checks:
            report.extend(check_axioms(g))
        if CONNECTED in checks:
            report.extend(check_connected(g, backend))
        if CHARACTER in checks:
            report.extend(check_character(g, rank, lam))
    if RHO in checks and in_rho_window(lam):
        report.extend(check_rho_commutation(rank, lam, corrupt=corrupt))
    if lam.is_hook_dominant():
        if COMPAT in checks:
            report.extend(check_compatibility(rank, lam, cap))
        if READING in checks:
            report.extend(check_reading_independence(rank, lam))
    if SHIFT in checks:
        report.extend(check_shift(rank, lam, 1, cap, threads))
    return report


def sweep(instances=None, checks=DEFAULT_CHECKS, cap=DEFAULT_CAP, threads=None, backend=None, corrupt=False,
          seed=None):
    """
    Verify many instances, in parallel across instances.

    Instances whose Kac crystal exceeds `cap` are skipped with a warning.
    `seed` shuffles the order in which instances are scheduled; reports
    always come back in input order.
    """
    if instances is None:
        instances = default_sweep()
    instances = list(instances)
    order = list(range(len(instances)))
    if seed is not None:
        random.Random(seed).shuffle(order)

    def _run(i):
        rank, lam = instances[i]
        size = KacCrystal(rank, lam).cardinality()
        if cap is not None and size > cap:
            raise_warn_skipped_instance(rank, lam, size, cap)
            return None
        try:
            return verify_instance(rank, lam, checks, cap, None, backend, corrupt)
        except SizeCapExceeded as e:
            raise_warn_skipped_instance(rank, lam, e.cardinality, cap)
            return None

    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            done = dict(zip(order, executor.map(_run, order)))
    else:
        done = {i: _run(i) for i in order}
    return [done[i] for i in range(len(instances)) if done[i] is not None]


def hook_sweep(rank, box):
    """(rank, λ) for every hook partition λ° inside `box`."""
    return [
        (rank, hook_bijection(rank, shape))
        for shape in partitions_inside(box) if is_hook_partition(shape, rank.m, rank.n)
    ]
