import argparse
import json
import os
import re
import sys
from dataclasses import dataclass

from .classes import verify as checks
from .classes.embedding import pi_bar, xi
from .classes.errors import NotInImage, SizeCapExceeded
from .classes.kac import DEFAULT_CAP, MODELS, NORMAL, KacCrystal, KacElement
from .classes.rsk import KappaElement, rho, rho_inv
from .classes.shapes import conjugate, pad
from .classes.tableau import Tableau
from .classes.weights import Rank, Weight, hook_bijection
from .utils import graph_to_dot, graph_to_json, parse_rank, parse_weight, validate_rank_lambda


EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_NOT_IN_IMAGE = 4

FORMATS = ('json', 'dot')
VALUE_OPTIONS = ('--rank', '--lambda')
THREADS_ENV = 'KAC_CRYSTAL_THREADS'


@dataclass
class CliConfig:
    command: str
    rank: object = None
    lam: object = None
    out: str = None
    source: str = None
    format: str = 'json'
    cap: int = DEFAULT_CAP
    sweep: str = None
    checks: tuple = checks.DEFAULT_CHECKS
    seed: int = None
    threads: int = None
    backend: str = None
    timing: bool = False
    model: str = NORMAL
    ell: int = None
    inverse: bool = False
    corrupt: bool = False

    @classmethod
    def from_args(cls, args):
        threads = args.threads
        if os.environ.get(THREADS_ENV):
            threads = int(os.environ[THREADS_ENV])
        rank = parse_rank(args.rank) if getattr(args, 'rank', None) else None
        lam = parse_weight(args.lam, rank) if getattr(args, 'lam', None) else None
        if lam is not None and rank is None:
            rank = lam.rank
        if lam is not None and args.command in ('crystal', 'verify', 'rsk'):
            validate_rank_lambda(rank, lam)
        names = tuple(x.strip() for x in getattr(args, 'checks', '').split(',') if x.strip())
        unknown = [x for x in names if x not in checks.CHECKS]
        if unknown:
            raise ValueError(f"Unknown check '{unknown[0]}'. Choose from: {list(checks.CHECKS)}")
        return cls(
            command=args.command,
            rank=rank,
            lam=lam,
            out=getattr(args, 'out', None),
            source=getattr(args, 'source', None),
            format=getattr(args, 'format', 'json'),
            cap=None if getattr(args, 'cap', DEFAULT_CAP) == 0 else getattr(args, 'cap', DEFAULT_CAP),
            sweep=getattr(args, 'sweep', None),
            checks=names or checks.DEFAULT_CHECKS,
            seed=getattr(args, 'seed', None),
            threads=threads,
            backend=getattr(args, 'backend', None),
            timing=getattr(args, 'timing', False),
            model=getattr(args, 'model', NORMAL),
            ell=getattr(args, 'ell', None),
            inverse=getattr(args, 'inverse', False),
            corrupt=getattr(args, 'corrupt', False),
        )


def _emit(text, path=None):
    if path:
        with open(path, 'w') as f:
            f.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith('\n'):
            sys.stdout.write('\n')


def _read_json(path=None):
    if path:
        with open(path) as f:
            return json.load(f)
    return json.load(sys.stdin)


def _dumps(data):
    return json.dumps(data, indent=2, ensure_ascii=False)


def cmd_crystal(config):
    if config.lam is None:
        raise ValueError("crystal needs --rank and --lambda")
    try:
        g = KacCrystal(config.rank, config.lam, config.model, config.ell).generate_graph(config.cap, config.threads)
    except SizeCapExceeded as e:
        print(f"crystal has {e.cardinality} vertices, cap is {e.cap}", file=sys.stderr)
        return EXIT_CAP
    if config.out:
        text = graph_to_dot(g) if config.format == 'dot' else graph_to_json(g, indent=2)
        _emit(text, config.out)
    print(f"vertices={g.number_of_nodes()} edges={g.number_of_edges()}")
    return EXIT_OK


def cmd_verify(config):
    if config.sweep is not None:
        if config.sweep != checks.DEFAULT_SWEEP:
            raise ValueError(f"Unknown sweep '{config.sweep}'. Choose from: ['{checks.DEFAULT_SWEEP}']")
        reports = checks.sweep(None, config.checks, config.cap, config.threads, config.backend,
                               config.corrupt, config.seed)
        data = [report.to_dict(config.timing) for report in reports]
        passed = all(report.passed for report in reports)
    else:
        if config.lam is None:
            raise ValueError("verify needs --sweep or --rank and --lambda")
        try:
            report = checks.verify_instance(config.rank, config.lam, config.checks, config.cap, config.threads,
                                            config.backend, config.corrupt)
        except SizeCapExceeded as e:
            print(f"crystal has {e.cardinality} vertices, cap is {e.cap}", file=sys.stderr)
            return EXIT_CAP
        data = report.to_dict(config.timing)
        passed = report.passed
    _emit(_dumps(data), config.out)
    return EXIT_OK if passed else EXIT_FAILED


def _lambda_of(rank, b):
    plus = pad(b.t_plus.shape.outer, rank.m)
    minus = pad(conjugate(b.t_minus.shape.outer), rank.n)
    return Weight.from_parts(rank, plus, minus)


def cmd_embed(config):
    data = _read_json(config.source)
    rank = config.rank
    if config.inverse:
        b = KacElement.from_dict(data)
        rank = rank or Rank(b.s.m, b.s.n)
        lam = config.lam or _lambda_of(rank, b)
        t = pi_bar(rank, lam, b)
        if t is None:
            _emit('null', config.out)
            return EXIT_NOT_IN_IMAGE
        _emit(_dumps(t.to_dict()), config.out)
        return EXIT_OK
    if rank is None:
        raise ValueError("embed needs --rank")
    t = Tableau.from_dict(data)
    lam = hook_bijection(rank, t.shape.outer)
    _emit(_dumps(xi(rank, lam, t).to_dict()), config.out)
    return EXIT_OK


def cmd_rsk(config):
    if config.lam is None:
        raise ValueError("rsk needs --lambda")
    data = _read_json(config.source)
    try:
        if config.inverse:
            result = rho_inv(config.rank, config.lam, KappaElement.from_dict(data))
        else:
            result = rho(config.rank, config.lam, KacElement.from_dict(data), config.ell)
    except NotInImage as e:
        print(str(e), file=sys.stderr)
        _emit('null', config.out)
        return EXIT_NOT_IN_IMAGE
    _emit(_dumps(result.to_dict()), config.out)
    return EXIT_OK


COMMANDS = {
    'crystal': cmd_crystal,
    'verify': cmd_verify,
    'embed': cmd_embed,
    'rsk': cmd_rsk,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog='kaccrystal',
        description='Crystal bases of Kac modules over U_q(gl(m|n)).',
    )
    sub = parser.add_subparsers(dest='command', required=True)

    def _common(p):
        p.add_argument('--rank', help='rank as "m,n"')
        p.add_argument('--lambda', dest='lam', help='weight as "4,3,2|3,1,0"')
        p.add_argument('--out', help='output file, stdout by default')
        p.add_argument('--threads', type=int, default=os.cpu_count(),
                       help=f'worker threads, overridden by ${THREADS_ENV}')

    p = sub.add_parser('crystal', help='generate the crystal graph of K(λ)')
    _common(p)
    p.add_argument('--format', choices=FORMATS, default='json')
    p.add_argument('--cap', type=int, default=DEFAULT_CAP, help='vertex cap, 0 disables it')
    p.add_argument('--model', choices=MODELS, default=NORMAL)
    p.add_argument('--ell', type=int, help='rectangle width of the dual model')

    p = sub.add_parser('verify', help='check crystal axioms, connectedness, characters, ρ and ξ')
    _common(p)
    p.add_argument('--sweep', help=f'"{checks.DEFAULT_SWEEP}" runs the default sweep')
    p.add_argument('--checks', default=','.join(checks.DEFAULT_CHECKS),
                   help=f'comma-separated subset of {",".join(checks.CHECKS)}')
    p.add_argument('--cap', type=int, default=DEFAULT_CAP, help='vertex cap, 0 disables it')
    p.add_argument('--seed', type=int, help='shuffles the scheduling order of sweep instances')
    p.add_argument('--backend', choices=('networkx', 'igraph'), default=None)
    p.add_argument('--timing', action='store_true', help='record elapsed milliseconds in the report')
    p.add_argument('--corrupt', action='store_true', help=argparse.SUPPRESS)

    p = sub.add_parser('embed', help='ξ_λ of a hook tableau, or π̄_λ with --inverse')
    _common(p)
    p.add_argument('--in', dest='source', help='input JSON file, stdin by default')
    p.add_argument('--inverse', action='store_true')

    p = sub.add_parser('rsk', help='ρ_λ of a dual-model Kac element, or ρ_λ⁻¹ with --inverse')
    _common(p)
    p.add_argument('--in', dest='source', help='input JSON file, stdin by default')
    p.add_argument('--ell', type=int, help='rectangle width')
    p.add_argument('--inverse', action='store_true')
    return parser


_NEGATIVE = re.compile(r'-\d')


def attach_negative_values(argv):
    """Rewrite `--lambda -1|1` as `--lambda=-1|1`; argparse reads a bare
    leading minus as an option."""
    joined = []
    tokens = iter(argv)
    for token in tokens:
        if token in VALUE_OPTIONS:
            value = next(tokens, None)
            if value is not None and _NEGATIVE.match(value):
                joined.append(f"{token}={value}")
                continue
            joined.append(token)
            if value is not None:
                joined.append(value)
        else:
            joined.append(token)
    return joined


def main(argv=None):
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(attach_negative_values(argv))
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        config = CliConfig.from_args(args)
        return COMMANDS[config.command](config)
    except (ValueError, KeyError, TypeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
