"""Command-line front end.

Exit codes: 0 success or affirmative verdict, 1 corpus failure, 2 input
error, 3 negative verdict, 4 unsupported weights, 5 invalid augmentation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

import numpy as np

from . import errors
from .builder import (
    associated_discrete_frame,
    construct_dual_by_augmentation,
    enumerate_augmented_duals,
    lift_local_duals,
    local_canonical_duals,
)
from .corpus import run_corpus
from .discrete import canonical_dual, frame_bounds, is_dual_pair, is_frame
from .fusion import (
    alternate_dual_check,
    canonical_dual_family,
    fusion_frame_bounds,
    is_fusion_frame,
    is_orthonormal_fusion_basis,
    riesz_report,
)
from .io import dump_document, family_to_document, parse_family
from .subspaces import DEFAULT_POLICY

EXIT_OK = 0
EXIT_CORPUS = 1
EXIT_INPUT = 2
EXIT_NEGATIVE = 3
EXIT_WEIGHTS = 4
EXIT_AUGMENT = 5

TOL_ENV = "FUSIONFRAME_TOL"


def _num(x) -> str:
    return f"{float(x) + 0.0:.12g}"


def _vec(v) -> str:
    return "(" + ", ".join(_num(x) for x in v) + ")"


def _jsonable(x):
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, np.ndarray):
        return _jsonable((x + 0.0).tolist())
    if isinstance(x, (np.bool_,)):
        return bool(x)
    if isinstance(x, (np.floating,)):
        return float(x)
    if isinstance(x, (np.integer,)):
        return int(x)
    return x


def _emit(args, payload: dict, lines: List[str]):
    if args.format == "machine":
        sys.stdout.write(json.dumps(_jsonable(payload), indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")


def _policy(args):
    return DEFAULT_POLICY.with_identity_tol(args.tol)


def _load(path, args):
    return parse_family(path, _policy(args))


# -- commands -----------------------------------------------------------------


def cmd_analyze(args) -> int:
    policy = _policy(args)
    spec = _load(args.file, args)
    fam = spec.family
    bounds = fusion_frame_bounds(fam)
    frame = is_fusion_frame(fam, policy)
    rr = riesz_report(fam, policy=policy)
    report = {
        "name": spec.name,
        "dimension": fam.ambient_dim,
        "member_dims": fam.dims,
        "weights": fam.weights.tolist(),
        "lower_bound": bounds.lower,
        "upper_bound": bounds.upper,
        "is_fusion_frame": frame,
        "is_bessel": True,
        "is_tight": frame and abs(bounds.upper - bounds.lower) <= args.tol,
        "is_riesz": rr.is_riesz,
        "is_orthonormal_basis": is_orthonormal_fusion_basis(fam, args.tol),
        "riesz_lower": rr.lower,
        "riesz_upper": rr.upper,
    }
    lines = [
        f"name: {spec.name or '-'}",
        f"dimension: {fam.ambient_dim}",
        f"member dims: {' '.join(str(k) for k in fam.dims)}",
        f"weights: {' '.join(_num(w) for w in fam.weights)}",
        f"lower bound A: {_num(bounds.lower)}",
        f"upper bound B: {_num(bounds.upper)}",
        f"fusion frame: {'yes' if frame else 'no'}",
        "bessel: yes",
        f"tight: {'yes' if report['is_tight'] else 'no'}",
        f"fusion riesz basis: {'yes' if rr.is_riesz else 'no'}",
        f"orthonormal fusion basis: {'yes' if report['is_orthonormal_basis'] else 'no'}",
        f"riesz constants C, D: {_num(rr.lower)} {_num(rr.upper)}",
    ]
    _emit(args, report, lines)
    return EXIT_OK if frame else EXIT_NEGATIVE


def _dual_direction(w, v, args, label):
    rep = alternate_dual_check(w, v, args.tol, _policy(args))
    payload = {"direction": label, "residual": rep.residual, "is_dual": rep.is_dual, "tolerance": rep.tolerance}
    line = f"{label}: residual {_num(rep.residual)} -> {'dual' if rep.is_dual else 'not a dual'} (tol {_num(rep.tolerance)})"
    return rep, payload, line


def cmd_check_dual(args) -> int:
    w = _load(args.w_file, args).family
    v = _load(args.v_file, args).family
    rep, payload, line = _dual_direction(w, v, args, "V is a dual of W")
    results, lines = [payload], [line]
    if args.both:
        try:
            _, p2, l2 = _dual_direction(v, w, args, "W is a dual of V")
        except errors.NotAFusionFrame:
            p2 = {"direction": "W is a dual of V", "residual": None, "is_dual": False, "tolerance": args.tol}
            l2 = "W is a dual of V: V is not a fusion frame"
        results.append(p2)
        lines.append(l2)
    _emit(args, {"checks": results}, lines)
    return EXIT_OK if rep.is_dual else EXIT_NEGATIVE


def _read_h_file(path, d):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise errors.ParseError(f"{path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise errors.ParseError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if isinstance(doc, dict):
        doc = doc.get("h")
    if not isinstance(doc, list):
        raise errors.ValidationError(f"{path}: expected a list of vectors (or null) under 'h'")
    out = []
    for i, h in enumerate(doc):
        if h is None:
            out.append(None)
        elif isinstance(h, list) and len(h) == d and all(
            isinstance(x, (int, float)) and not isinstance(x, bool) for x in h
        ):
            out.append(np.array(h, dtype=float))
        else:
            raise errors.ValidationError(f"{path}: h[{i}] must be null or a list of {d} numbers")
    return out


def _write_output(args, text: str):
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_construct(args) -> int:
    policy = _policy(args)
    spec = _load(args.file, args)
    fam = spec.family
    base = spec.name or "family"
    if args.mode == "canonical":
        families = [canonical_dual_family(fam, policy)]
        names = [f"canonical dual of {base}"]
    elif args.mode == "augment":
        if not args.h_file:
            raise errors.ValidationError("--mode augment needs --h-file")
        h = _read_h_file(args.h_file, fam.ambient_dim)
        families = [construct_dual_by_augmentation(fam, h, policy)]
        names = [f"augmented dual of {base}"]
    else:
        truncated = False
        strategy = "basis-vectors" if args.seed is None else "seeded-random"
        try:
            families = enumerate_augmented_duals(
                fam, strategy=strategy, cap=args.cap, seed=args.seed or 0, tol=args.tol, policy=policy
            )
        except errors.EnumerationCapExceeded as exc:
            families = exc.partial
            truncated = True
            print(f"warning: enumeration truncated at {args.cap} families", file=sys.stderr)
        names = [f"augmented dual {i} of {base}" for i in range(len(families))]

    for v in families:
        rep = alternate_dual_check(fam, v, args.tol, policy)
        if not rep.is_dual:  # pragma: no cover - constructions are duals by design
            print(f"error: constructed family failed verification (residual {_num(rep.residual)})", file=sys.stderr)
            return EXIT_NEGATIVE

    docs = [family_to_document(v, n) for v, n in zip(families, names)]
    if args.mode == "enumerate":
        text = json.dumps({"truncated": truncated, "families": docs}, indent=2) + "\n"
    else:
        text = dump_document(docs[0])
    _write_output(args, text)
    return EXIT_OK


def cmd_riesz(args) -> int:
    policy = _policy(args)
    fam = _load(args.file, args).family
    dual = _load(args.dual, args).family if args.dual else None
    rr = riesz_report(fam, dual, policy)
    payload = {
        "is_riesz": rr.is_riesz,
        "is_fusion_frame": rr.is_fusion_frame,
        "synthesis_injective": rr.synthesis_injective,
        "analysis_surjective": rr.analysis_surjective,
        "dims_sum": rr.dims_sum,
        "dimension": fam.ambient_dim,
        "lower": rr.lower,
        "upper": rr.upper,
        "local_bases_riesz": rr.local_bases_riesz,
        "dual_contains_canonical": rr.dual_contains_canonical,
    }
    yn = lambda b: "yes" if b else "no"  # noqa: E731
    lines = [
        f"fusion riesz basis: {yn(rr.is_riesz)}",
        f"fusion frame: {yn(rr.is_fusion_frame)}",
        f"synthesis injective: {yn(rr.synthesis_injective)}",
        f"analysis surjective: {yn(rr.analysis_surjective)}",
        f"sum of member dims: {rr.dims_sum} (ambient {fam.ambient_dim})",
        f"riesz constants C, D: {_num(rr.lower)} {_num(rr.upper)}",
        f"local bases form a riesz basis: {yn(rr.local_bases_riesz)}",
    ]
    if dual is not None:
        lines.append(f"dual contains canonical dual subspaces: {yn(rr.dual_contains_canonical)}")
    _emit(args, payload, lines)
    return EXIT_OK if rr.is_riesz else EXIT_NEGATIVE


def cmd_discrete(args) -> int:
    policy = _policy(args)
    spec = _load(args.file, args)
    fam = spec.family
    local = spec.local_frames
    if local is None:
        local = [s.ortho_basis for s in fam.subspaces]
    frame = associated_discrete_frame(fam, local, policy)
    bounds = frame_bounds(frame)
    ok = is_frame(frame, policy)
    payload = {
        "associated_frame": frame.vectors,
        "lower_bound": bounds.lower,
        "upper_bound": bounds.upper,
        "is_frame": ok,
    }
    lines = ["associated frame:"] + [f"  {_vec(v)}" for v in frame.vectors]
    lines.append(f"bounds A, B: {_num(bounds.lower)} {_num(bounds.upper)}")
    lines.append(f"frame: {'yes' if ok else 'no'}")
    if ok:
        dual = canonical_dual(frame, policy)
        lifted = lift_local_duals(fam, local, local_canonical_duals(fam, local, policy), policy)
        rep = is_dual_pair(frame, lifted, args.tol)
        payload.update(
            canonical_dual=dual.vectors,
            lifted_local_duals=lifted.vectors,
            lifted_residual=rep.residual,
            lifted_is_dual=rep.is_dual,
        )
        lines.append("canonical dual:")
        lines += [f"  {_vec(v)}" for v in dual.vectors]
        lines.append("lifted local canonical duals:")
        lines += [f"  {_vec(v)}" for v in lifted.vectors]
        lines.append(f"lifted dual residual: {_num(rep.residual)} -> {'dual' if rep.is_dual else 'not a dual'}")
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_verify_paper(args) -> int:
    rows = run_corpus(args.fixtures, _policy(args), args.filter)
    failed = [r for r in rows if not r.passed]
    payload = {
        "rows": [
            {"fixture": r.fixture, "check": r.check, "expected": r.expected, "actual": r.actual, "passed": r.passed}
            for r in rows
        ],
        "failed": len(failed),
    }
    lines = [
        f"{'PASS' if r.passed else 'FAIL'}  {r.fixture:<14} {r.check:<40} expected {r.expected} | actual {r.actual}"
        for r in rows
    ]
    lines.append(f"{len(rows) - len(failed)}/{len(rows)} checks passed")
    if not rows:
        lines.append("no fixtures matched")
    _emit(args, payload, lines)
    if failed or not rows:
        for r in failed:
            print(f"failed: {r.fixture} {r.check}", file=sys.stderr)
        return EXIT_CORPUS
    return EXIT_OK


# -- argument parsing ---------------------------------------------------------


def _default_tol() -> float:
    raw = os.environ.get(TOL_ENV)
    if raw is None:
        return DEFAULT_POLICY.identity_tol
    return _positive_float(raw)


def _positive_float(raw: str) -> float:
    try:
        value = float(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid tolerance {raw!r}") from None
    if not (np.isfinite(value) and value > 0):
        raise argparse.ArgumentTypeError(f"tolerance must be positive, got {raw!r}")
    return value


def build_parser(default_tol: float) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=_positive_float, default=default_tol,
                        help=f"identity tolerance (default {default_tol:g}; env {TOL_ENV})")
    common.add_argument("--format", choices=["text", "machine"], default="text")

    parser = argparse.ArgumentParser(prog="fusionframe", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="bounds and structural flags of a family")
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check-dual", parents=[common], help="is V a dual of W?")
    p.add_argument("w_file")
    p.add_argument("v_file")
    p.add_argument("--both", action="store_true", help="also test the reverse direction")
    p.set_defaults(func=cmd_check_dual)

    p = sub.add_parser("construct", parents=[common], help="build dual families")
    p.add_argument("file")
    p.add_argument("--mode", choices=["canonical", "augment", "enumerate"], default="canonical")
    p.add_argument("--h-file", help="JSON list of augmentation vectors (null keeps the canonical subspace)")
    p.add_argument("--seed", type=int, help="draw random augmentations from this seed (enumerate mode)")
    p.add_argument("--cap", type=int, default=256, help="maximum number of enumerated families")
    p.add_argument("--output", "-o", help="write to this file instead of stdout")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("riesz", parents=[common], help="fusion Riesz basis diagnostics")
    p.add_argument("file")
    p.add_argument("--dual", help="optional dual family to test for the canonical inclusion")
    p.set_defaults(func=cmd_riesz)

    p = sub.add_parser("discrete", parents=[common], help="associated discrete frame and its duals")
    p.add_argument("file")
    p.set_defaults(func=cmd_discrete)

    p = sub.add_parser("verify-paper", parents=[common], help="replay the bundled worked examples")
    p.add_argument("--filter", help="run only the fixture with this name")
    p.add_argument("--fixtures", help="directory of fixture files (default: bundled corpus)")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    try:
        default_tol = _default_tol()
    except argparse.ArgumentTypeError as exc:
        print(f"error: {TOL_ENV}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    parser = build_parser(default_tol)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    if getattr(args, "cap", 1) is not None and getattr(args, "cap", 1) < 1:
        print("error: --cap must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except (errors.ParseError, errors.ValidationError, errors.ShapeMismatch,
            errors.DimensionMismatch, errors.LocalSpanMismatch, errors.NotLocalDual) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except errors.UnsupportedWeights as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_WEIGHTS
    except errors.InvalidAugmentation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_AUGMENT
    except (errors.NotAFusionFrame, errors.NotAFrame) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
