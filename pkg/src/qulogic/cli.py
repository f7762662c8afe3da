"""Command-line front end.

    qulogic match A.pgm B.pgm            exact likelihood of two images
    qulogic sample IMG.pgm --count T --seed S
    qulogic estimate A.pgm B.pgm --trials n --seed S [--workers w]
    qulogic fuzzyop {not,and,or} IMG.pgm [IMG2.pgm] --out OUT.pgm [--norm product|minmax]

Common flags: ``--invert`` (dark pixels are members), ``--pad`` (zero-pad to a
common square), ``--json`` (one JSON report on stdout).

Exit codes: 0 ok, 2 domain error, 3 parse/read error, 4 internal-consistency error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import ConsistencyError, DomainError, ParseError
from .fuzzysets import fuzzy_and, fuzzy_not, fuzzy_or, likelihood_fuzzy, standardize
from .lattice import unflatten
from .pgm import fuzzy_to_pixels, image_to_fuzzy, read_pgm, write_pgm
from .qusets import from_fuzzy_sqrt, inner, overlap_probability
from .registers import StochasticRegister, estimate_overlap

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE, EXIT_CONSISTENCY = 0, 2, 3, 4
BRIDGE_TOL = 1e-10


@dataclass
class RunReport:
    command: str
    inputs: dict
    seed: int | None = None
    results: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0
    stream: list | None = None

    def __post_init__(self):
        for k, v in self.results.items():
            if not math.isfinite(v):
                raise ConsistencyError(f"non-finite result {k} = {v!r}")

    def to_dict(self) -> dict:
        d = asdict(self)
        if d["stream"] is None:
            del d["stream"]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), allow_nan=False)

    def to_text(self) -> str:
        lines = [" ".join(map(str, item)) for item in self.stream or ()]
        lines += [f"{k} {v!r}" for k, v in self.results.items()]
        return "\n".join(lines) + "\n"


def _load_fuzzy(paths, args):
    images = [read_pgm(p) for p in paths]
    if args.pad:
        size = max(max(img.width, img.height) for img in images)
        return [image_to_fuzzy(img, args.invert, size) for img in images]
    sets = [image_to_fuzzy(img, args.invert) for img in images]
    if len({len(s) for s in sets}) > 1:
        dims = ", ".join(f"{img.width}x{img.height}" for img in images)
        raise DomainError(f"image sizes differ ({dims}); use --pad")
    return sets


def _flags(args, *names):
    return {n: getattr(args, n) for n in ("invert", "pad") + names}


def cmd_match(args) -> RunReport:
    fa, fb = _load_fuzzy([args.a, args.b], args)
    pa, pb = standardize(fa), standardize(fb)
    h_fuzzy = likelihood_fuzzy(pa, pb)
    qa, qb = from_fuzzy_sqrt(pa), from_fuzzy_sqrt(pb)
    h = inner(qa, qb)
    gap = abs(h_fuzzy - h.real)
    if gap > BRIDGE_TOL or abs(h.imag) > BRIDGE_TOL:
        raise ConsistencyError(f"fuzzy and quantum likelihoods disagree by {gap!r}")
    return RunReport("match", {"files": [args.a, args.b], "flags": _flags(args)}, results={
        "N": fa.grid.N,
        "likelihood_fuzzy": h_fuzzy,
        "inner_real": h.real,
        "inner_imag": h.imag,
        "overlap_probability": overlap_probability(qa, qb),
        "bridge_gap": gap,
    })


def cmd_sample(args) -> RunReport:
    (fa,) = _load_fuzzy([args.file], args)
    p = standardize(fa)
    reg = StochasticRegister(p, args.seed)
    ks = reg.sample_indices(args.count)
    stream = [tuple(unflatten(int(k), p.grid)) for k in ks]
    freq = np.bincount(ks - 1, minlength=len(p)) / args.count
    results = {"count": args.count}
    for d in p.grid.dots():
        K = (d.i - 1) * p.grid.N + d.j
        results[f"freq({d.i},{d.j})"] = float(freq[K - 1])
    return RunReport("sample", {"files": [args.file], "flags": _flags(args, "count")},
                     seed=args.seed, results=results, stream=[list(s) for s in stream])


def cmd_estimate(args) -> RunReport:
    fa, fb = _load_fuzzy([args.a, args.b], args)
    qa, qb = from_fuzzy_sqrt(standardize(fa)), from_fuzzy_sqrt(standardize(fb))
    exact = overlap_probability(qa, qb)
    est = estimate_overlap(qa, qb, args.trials, args.seed, args.workers)
    diff = est.p_hat - exact
    if est.std_err_p > 0:
        z = diff / est.std_err_p
    elif abs(diff) <= 1e-9:
        z = 0.0
    else:
        # all trials agreed although the exact probability is not 0 or 1
        fallback = math.sqrt(exact * (1.0 - exact) / args.trials)
        z = diff / fallback
    return RunReport("estimate", {"files": [args.a, args.b], "flags": _flags(args, "trials", "workers")},
                     seed=args.seed, results={
        "exact_overlap_probability": exact,
        "exact_h_abs": math.sqrt(exact),
        "successes": est.successes,
        "trials": est.trials,
        "p_hat": est.p_hat,
        "h_abs_hat": est.h_abs_hat,
        "std_err_p": est.std_err_p,
        "z_score": z,
    })


def cmd_fuzzyop(args) -> RunReport:
    arity = 1 if args.op == "not" else 2
    if len(args.files) != arity:
        raise DomainError(f"'{args.op}' takes {arity} image(s), got {len(args.files)}")
    sets = _load_fuzzy(args.files, args)
    if args.op == "not":
        out = fuzzy_not(sets[0])
    elif args.op == "and":
        out = fuzzy_and(*sets, norm="product" if args.norm == "product" else "min")
    else:
        out = fuzzy_or(*sets, norm="product" if args.norm == "product" else "max")
    write_pgm(args.out, fuzzy_to_pixels(out, 255), 255)
    return RunReport("fuzzyop", {"files": list(args.files), "out": args.out,
                                 "flags": _flags(args, "op", "norm")},
                     results={"N": out.grid.N, "mean_adequacy": float(out.values.mean())})


def _u64(text):
    v = int(text)
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError(f"seed must be an unsigned 64-bit integer, got {text}")
    return v


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--invert", action="store_true", help="dark pixels get high adequacy")
    common.add_argument("--pad", action="store_true", help="zero-pad images to a common square")
    common.add_argument("--json", action="store_true", help="emit one JSON report")

    parser = argparse.ArgumentParser(prog="qulogic", description="Fuzzy and quantum set tools for PGM images.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("match", parents=[common], help="exact likelihood of two images")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("sample", parents=[common], help="draw dots from a stochastic register")
    p.add_argument("file")
    p.add_argument("--count", type=_positive, required=True)
    p.add_argument("--seed", type=_u64, required=True)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("estimate", parents=[common], help="Monte Carlo masked-readout estimate of |H|^2")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--trials", type=_positive, required=True)
    p.add_argument("--seed", type=_u64, required=True)
    p.add_argument("--workers", type=_positive, default=1)
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("fuzzyop", parents=[common], help="fuzzy not/and/or of images")
    p.add_argument("op", choices=["not", "and", "or"])
    p.add_argument("files", nargs="+")
    p.add_argument("--norm", choices=["product", "minmax"], default="product")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_fuzzyop)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        report = args.func(args)
    except ParseError as exc:
        print(f"qulogic: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"qulogic: cannot read input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DomainError as exc:
        print(f"qulogic: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConsistencyError as exc:
        print(f"qulogic: internal consistency check failed: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    report.elapsed_ms = (time.perf_counter() - start) * 1000.0
    sys.stdout.write(report.to_json() + "\n" if args.json else report.to_text())
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
