"""Command-line interface: ``qfrac <command> ...``.

Exit codes: 0 success, 2 bad input, 3 a numerical self-check failed.
"""

from __future__ import annotations

import argparse
import math
import sys
from fractions import Fraction

import numpy as np
import scipy.linalg

from . import adder as adder_mod
from . import classifier as clf
from .bridge import NotUnitaryError, as_unitary, gate_exponent, gate_roots
from .euler import REPORTED_EULER_STATE, align_phase, euler_demo
from .gates import GeneratorKind, named_gate
from .simulator import RNG_NAME, sample_probability

CHECK_TOL = 1e-9
EXIT_INPUT = 2
EXIT_NUMERIC = 3


class InputError(Exception):
    pass


class CheckFailed(Exception):
    pass


def _term(s: str) -> float:
    if "pi" not in s:
        return float(s)
    coef = s.replace("pi", "").rstrip("*")
    if coef in ("", "+", "-"):
        return -math.pi if coef == "-" else math.pi
    return float(coef) * math.pi


def parse_angle(text: str) -> float:
    """Parse a float, a fraction, or a multiple of pi: ``pi/24``, ``3pi/4``, ``-2*pi``, ``1/3``."""
    s = text.strip().lower().replace(" ", "")
    head, sep, denom = s.partition("/")
    try:
        value = _term(head)
        return value / _term(denom) if sep else value
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse {text!r} as a number") from exc


def parse_gate(spec: str) -> np.ndarray:
    """A gate name (X, Y, Z, H, I) or four comma-separated complex entries, row-major."""
    if "," not in spec:
        return named_gate(spec)
    parts = [p.strip() for p in spec.split(",")]
    if len(parts) != 4:
        raise InputError("a matrix gate needs exactly 4 comma-separated entries")
    try:
        entries = [complex(p.replace("i", "j")) for p in parts]
    except ValueError as exc:
        raise InputError(f"bad complex entry in {spec!r}") from exc
    return np.array(entries, dtype=complex).reshape(2, 2)


def fmt_num(x: float, precision: int) -> str:
    return f"{x + 0.0:.{precision}g}"


def fmt_complex(z: complex, precision: int) -> str:
    return f"{z.real + 0.0:.{precision}g}{z.imag + 0.0:+.{precision}g}i"


def fmt_matrix(m: np.ndarray, precision: int) -> str:
    return "\n".join("\t".join(fmt_complex(z, precision) for z in row) for row in m)


def _phase_aligned_error(x: np.ndarray, y: np.ndarray) -> float:
    return float(np.max(np.abs(align_phase(x.reshape(-1), y.reshape(-1)) - y.reshape(-1))))


def power_check(a: np.ndarray, b: np.ndarray, exponent: float, exact_phase: bool) -> tuple[str, float]:
    """Check ``b`` against ``a**exponent`` independently of the quaternion route.

    Rational exponents ``p/q`` compare ``b**q`` with ``a**p`` by repeated
    multiplication; others fall back to the principal matrix power of ``b``.
    """
    frac = Fraction(exponent).limit_denominator(1000)
    if abs(float(frac) - exponent) < 1e-12:
        p, q = frac.numerator, frac.denominator
        lhs, rhs = np.linalg.matrix_power(b, q), np.linalg.matrix_power(a, p)
        label = f"B^{q} vs A^{p}"
    else:
        lhs, rhs = scipy.linalg.fractional_matrix_power(b, 1.0 / exponent), a
        label = f"B^(1/{exponent:g}) vs A"
    err = float(np.max(np.abs(lhs - rhs))) if exact_phase else _phase_aligned_error(lhs, rhs)
    return label, err


def cmd_power(args, out) -> None:
    try:
        a = as_unitary(parse_gate(args.gate))
    except NotUnitaryError as exc:
        raise InputError(str(exc)) from exc
    b = gate_exponent(a, args.exponent, args.recover_phase)
    p = args.precision
    print(fmt_matrix(b, p), file=out)
    label, err = power_check(a, b, args.exponent, args.recover_phase)
    scope = "exact" if args.recover_phase else "up to global phase"
    print(f"check\t{label}\t{scope}\tmax_error={fmt_num(err, 3)}", file=out)
    if args.roots:
        for m, r in enumerate(gate_roots(a, args.roots, args.recover_phase)):
            print(f"root {m} of {args.roots}", file=out)
            print(fmt_matrix(r, p), file=out)
    if err > CHECK_TOL:
        raise CheckFailed(f"power self-check failed: {label} differs by {err:.3g}")


def _generators(text: str) -> list[GeneratorKind]:
    return [GeneratorKind(t.strip()) for t in text.split(",")]


def _angles(text: str, unit: str) -> list[float]:
    values = [parse_angle(t) for t in text.split(",")]
    if unit == "degrees":
        return [math.radians(v) for v in values]
    if unit == "exponent":
        return [math.pi * v for v in values]
    return values


def cmd_adder(args, out) -> None:
    gens = _generators(args.generators)
    angles = _angles(args.angles, "degrees" if args.degrees else args.unit)
    if len(gens) != len(angles):
        raise InputError("--generators and --angles must have the same length")
    spec = adder_mod.AdderSpec(tuple(zip(gens, angles)))
    p = adder_mod.adder_n_simulated(spec)
    print(f"p_one={fmt_num(p, args.precision)}", file=out)
    if len(gens) == 2:
        a, b = spec.gates()
        print(f"closed_form={fmt_num(adder_mod.general_two_probability(a, b), args.precision)}", file=out)
    if args.shots:
        r = sample_probability(p, args.shots, args.seed)
        print(f"sampled={fmt_num(r.frequency('1'), args.precision)}\tshots={r.shots}"
              f"\tseed={r.seed}\trng={r.rng}", file=out)


def cmd_surface(args, out) -> None:
    gens = _generators(args.generators)
    if len(gens) != 2:
        raise InputError("--generators takes exactly two generators, e.g. x,h")
    grid = adder_mod.surface(gens[0], gens[1], args.resolution)
    out.write(grid.to_csv(args.precision))


def _read_corpus(path: str, fmt: str) -> clf.Corpus:
    return clf.read_lambeq(path) if fmt == "lambeq" else clf.read_corpus(path)


def _mode(args):
    return clf.Sampled(args.shots, args.seed) if args.shots else "analytic"


def cmd_train(args, out) -> None:
    corpus = _read_corpus(args.corpus, args.format)
    if args.vocab_file:
        vocab = clf.read_vocabulary(args.vocab_file)
    else:
        vocab = clf.build_vocabulary(corpus, args.vocab_size)
    model = clf.train(corpus, parse_angle(args.increment), vocab,
                      GeneratorKind(args.generator), dedupe=args.dedupe == "on")
    out.write(model.to_json())


def cmd_classify(args, out) -> None:
    model = clf.ClassifierModel.load(args.model)
    phrase = " ".join(args.phrase)
    r = clf.classify(model, phrase, _mode(args), dedupe=args.dedupe == "on")
    for topic, score in r.scores.items():
        print(f"{topic}\t{fmt_num(score, args.precision)}", file=out)
    print(f"topic={r.topic}", file=out)
    print(f"tie={'true' if r.tie else 'false'}", file=out)
    if isinstance(r.mode, clf.Sampled):
        print(f"shots={r.mode.shots}\tseed={r.mode.seed}\trng={RNG_NAME}", file=out)


def cmd_evaluate(args, out) -> None:
    model = clf.ClassifierModel.load(args.model)
    test = _read_corpus(args.corpus, args.format)
    ev = clf.evaluate(model, test, _mode(args), dedupe=args.dedupe == "on")
    out.write(ev.report(args.precision))


def cmd_euler_demo(args, out) -> None:
    demo = euler_demo()
    p = args.precision
    overlaps = demo.overlaps()
    for name, v in demo.paths.items():
        aligned = align_phase(v, REPORTED_EULER_STATE)
        err = float(np.max(np.abs(aligned - REPORTED_EULER_STATE)))
        print(f"euler {name}\t{fmt_complex(v[0], p)}\t{fmt_complex(v[1], p)}"
              f"\toverlap={fmt_num(overlaps[name], p)}"
              f"\treported_state_error={fmt_num(err, 3)}", file=out)
    q = demo.quaternion_state
    q_err = float(np.max(np.abs(q - demo.target)))
    print(f"quaternion\t{fmt_complex(q[0], p)}\t{fmt_complex(q[1], p)}"
          f"\toverlap={fmt_num(overlaps['quaternion'], p)}\ttarget_error={fmt_num(q_err, 3)}", file=out)
    print(f"target\t{fmt_complex(demo.target[0], p)}\t{fmt_complex(demo.target[1], p)}", file=out)
    if q_err > CHECK_TOL:
        raise CheckFailed(f"quaternion tenth-root path misses the target by {q_err:.3g}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="RNG seed")
    common.add_argument("--output", "--out", dest="output", default=argparse.SUPPRESS,
                        help="write results here instead of standard output")
    common.add_argument("--precision", type=int, default=argparse.SUPPRESS,
                        help="significant digits in printed numbers (default 12)")

    parser = argparse.ArgumentParser(prog="qfrac", description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--output", "--out", dest="output", default="-")
    parser.add_argument("--precision", type=int, default=12)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("power", parents=[common], help="real power of a single-qubit gate")
    p.add_argument("--gate", required=True, help="X, Y, Z, H, I or 'a,b,c,d' complex entries")
    p.add_argument("--exponent", type=parse_angle, required=True)
    p.add_argument("--recover-phase", action="store_true")
    p.add_argument("--roots", type=int, default=0, help="also print all n-th root branches")
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("adder", parents=[common], help="evaluate an adder circuit")
    p.add_argument("--generators", required=True, help="comma-separated x/h list")
    p.add_argument("--angles", required=True, help="comma-separated angles")
    p.add_argument("--unit", choices=["radians", "degrees", "exponent"], default="radians")
    p.add_argument("--degrees", action="store_true", help="same as --unit degrees")
    p.add_argument("--shots", type=int, default=0)
    p.set_defaults(func=cmd_adder)

    p = sub.add_parser("surface", parents=[common], help="write a two-input probability surface as CSV")
    p.add_argument("--generators", required=True, help="two generators, e.g. x,h")
    p.add_argument("--resolution", type=int, default=33)
    p.set_defaults(func=cmd_surface)

    def classifier_flags(p, corpus: bool):
        if corpus:
            p.add_argument("--format", choices=["tsv", "lambeq"], default="tsv")
        p.add_argument("--dedupe", choices=["on", "off"], default="on")

    p = sub.add_parser("train", parents=[common], help="train a classifier model")
    p.add_argument("corpus")
    p.add_argument("--increment", default="pi/24", help="radians per occurrence")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--vocab-size", type=int, default=9)
    group.add_argument("--vocab-file")
    p.add_argument("--generator", choices=["x", "h"], default="x")
    classifier_flags(p, corpus=True)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("classify", parents=[common], help="classify a phrase")
    p.add_argument("model")
    p.add_argument("phrase", nargs="+")
    p.add_argument("--shots", type=int, default=0)
    classifier_flags(p, corpus=False)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("evaluate", parents=[common], help="evaluate a model on a labelled corpus")
    p.add_argument("model")
    p.add_argument("corpus")
    p.add_argument("--shots", type=int, default=0)
    classifier_flags(p, corpus=True)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("euler-demo", parents=[common], help="Euler-angle vs quaternion tenth of H")
    p.set_defaults(func=cmd_euler_demo)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.precision < 1:
        parser.error("--precision must be positive")
    if getattr(args, "shots", 0) < 0:
        parser.error("--shots must be nonnegative")
    try:
        if args.output == "-":
            args.func(args, sys.stdout)
        else:
            with open(args.output, "w", encoding="utf-8", newline="\n") as out:
                args.func(args, out)
    except CheckFailed as exc:
        print(f"qfrac: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (InputError, ValueError, OSError, KeyError) as exc:
        print(f"qfrac: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return 0


if __name__ == "__main__":
    sys.exit(main())
