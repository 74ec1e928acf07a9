"""``nvs <verb> <deffile> [flags]``: command-line driver.

Exit codes: 0 when every check passes, 1 when any check fails, 2 on input
errors (unreadable or malformed files, bad vectors, unmet preconditions).
"""

from __future__ import annotations

import argparse
import datetime
import json
import sys

from . import monoid_algebra as ma
from . import real_demo
from .definition import build_space, load_definition, parse_map, parse_vector, parse_vector_set
from .errors import DefinitionError, NearVecError
from .morphism import (
    Subspace,
    first_isomorphism,
    linear_map,
    map_from_basis,
    qk_preimage_check,
    quotient,
    subspace_as_space,
)
from .report import VerificationReport, _plain
from .space import (
    dim_of,
    extract_basis,
    minimal_decomposition,
    quasi_kernel,
    scalar_basis,
    span,
    span_difference_check,
    theta_decompose,
    verify_theta,
)
from .suite import SuiteOptions, run_suite

VERBS = ("verify", "qk", "span", "dim", "decompose", "basis", "quotient", "fit", "algebra",
         "demo-r3", "check-span-diff")


class InputError(Exception):
    """Bad command-line input; exit code 2."""


def _need(args, flag: str):
    value = getattr(args, flag.replace("-", "_"))
    if value is None:
        raise InputError(f"{args.verb} needs --{flag}")
    return value


def _fmt(v) -> str:
    return "(" + ",".join(map(str, v)) + ")"


def _vector_lines(vs) -> list[str]:
    return [_fmt(v) for v in sorted(vs)]


# each handler returns (data, reports); data maps a label to a value or list of lines


def cmd_verify(sp, args):
    opts = SuiteOptions(ql_max_size=args.ql_max_size, ql_max_sets=args.ql_max_sets,
                        dimspan_samples=args.dimspan_samples, seed=args.seed)
    return {}, run_suite(args.definition, opts)


def cmd_qk(sp, args):
    qk = quasi_kernel(sp)
    return {"count": len(qk), "quasi_kernel": _vector_lines(qk)}, []


def cmd_span(sp, args):
    S = parse_vector_set(_need(args, "set"), sp)
    out = span(sp, S)
    return {"set": _vector_lines(S), "count": len(out), "span": _vector_lines(out)}, []


def cmd_dim(sp, args):
    v = parse_vector(_need(args, "vec"), sp)
    return {"vector": _fmt(v), "dim": dim_of(sp, v),
            "minimal_sum": _vector_lines(minimal_decomposition(sp, v))}, []


def cmd_decompose(sp, args):
    v = parse_vector(_need(args, "vec"), sp)
    td = theta_decompose(sp, v)
    return {"vector": _fmt(v), "parts": _vector_lines(td.parts), "steps": len(td.trace)}, \
        [verify_theta(sp, td)]


def cmd_basis(sp, args):
    if args.set is not None:
        S = parse_vector_set(args.set, sp)
        B = extract_basis(sp, S)
        return {"set": _vector_lines(S), "basis": _vector_lines(B), "size": len(B)}, []
    fwd, rev = scalar_basis(sp), scalar_basis(sp, reverse=True)
    rep = VerificationReport("scalar basis cardinality")
    rep.add("forward and reversed orders agree", len(fwd) == len(rev), (fwd, rev))
    return {"scalar_basis": _vector_lines(fwd), "reversed_order": _vector_lines(rev),
            "size": len(fwd)}, [rep]


def cmd_quotient(sp, args):
    gens = parse_vector_set(_need(args, "subspace-gen"), sp)
    W = Subspace(sp, span(sp, gens))
    _, wrep = subspace_as_space(W)
    Q = quotient(sp, W)
    reps = [c[0] for c in Q.cosets]
    return {"subspace_size": len(W.members), "cosets": len(Q.cosets),
            "representatives": _vector_lines(reps),
            "quotient_quasi_kernel": _vector_lines(quasi_kernel(Q.space))}, [wrep, Q.report]


def cmd_fit(sp, args):
    path = _need(args, "map")
    try:
        with open(path, encoding="utf-8") as fh:
            images, basis_only = parse_map(fh.read(), sp)
    except OSError as e:
        raise InputError(f"cannot read map file: {e}") from e
    if basis_only:
        f = map_from_basis(sp, sp, images, name=path)
    else:
        f = linear_map(sp, sp, images, name=path)
    _, rep = first_isomorphism(f)
    ker = [v for v in sp.carrier if f(v) == sp.zero]
    img = {f(v) for v in sp.carrier}
    return {"kernel_size": len(ker), "image_size": len(img)}, [rep, qk_preimage_check(f)]


def cmd_algebra(sp, args):
    data, reports = {}, []
    if args.check_module:
        reports += [ma.check_ring(sp.group, seed=args.seed), ma.check_module(sp, seed=args.seed),
                    ma.check_orbits(sp), ma.check_projective(sp)]
    if args.orbit is not None:
        v = parse_vector(args.orbit, sp)
        o = ma.orbit(sp, v)
        rep = VerificationReport(f"orbit of {_fmt(v)}")
        rep.add("orbit = Span(v)", o == span(sp, [v]), None, size=len(o))
        data["orbit"] = _vector_lines(o)
        reports.append(rep)
    if args.projective is not None:
        v = parse_vector(args.projective, sp)
        fixed, rep = ma.projective_fixed_point(sp, v)
        data["projective_fixed_point"] = fixed
        reports.append(rep)
    if not data and not reports:
        raise InputError("algebra needs --check-module, --orbit or --projective")
    return data, reports


def cmd_demo(sp, args):
    tol = args.tol if args.tol is not None else real_demo.DEFAULT_TOL
    if not tol > 0:
        raise InputError("--tol must be positive")
    return {}, [real_demo.check_remark_identities(tol), real_demo.check_pairwise_nonclassical(tol),
                real_demo.check_pairwise_nonclassical(tol, u=(0, 1, 1))]


def cmd_span_diff(sp, args):
    v = parse_vector(_need(args, "vec"), sp)
    a, b = _need(args, "alpha"), _need(args, "beta")
    if not (0 <= a < sp.group.order and 0 <= b < sp.group.order):
        raise InputError("alpha and beta must be element labels")
    return {}, [span_difference_check(sp, v, a, b)]


HANDLERS = {
    "verify": cmd_verify, "qk": cmd_qk, "span": cmd_span, "dim": cmd_dim,
    "decompose": cmd_decompose, "basis": cmd_basis, "quotient": cmd_quotient, "fit": cmd_fit,
    "algebra": cmd_algebra, "demo-r3": cmd_demo, "check-span-diff": cmd_span_diff,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nvs", description="Exhaustive checks on finite near-vector spaces.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("deffile", nargs="?", help="space definition file (not needed for demo-r3)")
    p.add_argument("--set", help='vectors, e.g. "(1,0) (0,1)"')
    p.add_argument("--vec", help='a vector, e.g. "(1,1)"')
    p.add_argument("--map", help="map file for fit")
    p.add_argument("--subspace-gen", dest="subspace_gen", help="generators of the subspace for quotient")
    p.add_argument("--check-module", action="store_true", help="ring and module axioms (algebra)")
    p.add_argument("--orbit", help="vector whose Z[F]-orbit to compute (algebra)")
    p.add_argument("--projective", help="vector to test as a projective fixed point (algebra)")
    p.add_argument("--alpha", type=int, help="scalar label (check-span-diff)")
    p.add_argument("--beta", type=int, help="scalar label (check-span-diff)")
    p.add_argument("--tol", type=float, help="absolute tolerance for demo-r3 (default 1e-9)")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled checks (default 0)")
    p.add_argument("--ql-max-size", type=int, default=3, help="largest |S| in the independence scan")
    p.add_argument("--ql-max-sets", type=int, default=3000,
                   help="sets checked before switching to seeded sampling")
    p.add_argument("--dimspan-samples", type=int, default=200, help="sampled (v, w) pairs")
    p.add_argument("--no-timestamp", action="store_true", help="omit the header time and elapsed times")
    p.add_argument("--format", choices=("text", "json"), default="text")
    return p


def render_text(args, space_name, data, reports, timestamps: bool) -> str:
    out = []
    if timestamps:
        out.append(f"# nvs {args.verb} {datetime.datetime.now().isoformat(timespec='seconds')}")
    if space_name:
        out.append(f"space: {space_name}")
    for key in sorted(data):
        value = data[key]
        if isinstance(value, list):
            out.append(f"{key}:")
            out.extend(f"  {line}" for line in value)
        else:
            out.append(f"{key}: {value}")
    for r in reports:
        out.extend(r.lines(0, timestamps))
    if reports:
        passed = all(r.passed for r in reports)
        out.append(f"result: {'PASS' if passed else 'FAIL'} ({sum(r.passed for r in reports)}/{len(reports)} reports)")
    return "\n".join(out)


def render_json(args, space_name, data, reports, timestamps: bool) -> str:
    obj = {"verb": args.verb, "data": _plain(data),
           "reports": [r.to_dict(timestamps) for r in reports],
           "passed": all(r.passed for r in reports)}
    if space_name:
        obj["space"] = space_name
    if timestamps:
        obj["timestamp"] = datetime.datetime.now().isoformat(timespec="seconds")
    return json.dumps(obj, sort_keys=True)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    timestamps = not args.no_timestamp
    try:
        sp = None
        args.definition = None
        if args.verb != "demo-r3":
            if args.deffile is None:
                raise InputError(f"{args.verb} needs a definition file")
            try:
                args.definition = load_definition(args.deffile)
            except OSError as e:
                raise InputError(f"cannot read definition file: {e}") from e
            sp = build_space(args.definition)
        data, reports = HANDLERS[args.verb](sp, args)
    except (InputError, DefinitionError, NearVecError, ValueError) as e:
        print(f"nvs: error: {e}", file=sys.stderr)
        return 2
    render = render_json if args.format == "json" else render_text
    print(render(args, sp.name if sp else None, data, reports, timestamps))
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
