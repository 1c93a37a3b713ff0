"""Command-line front end: counting tables, radicals, blocks, tensor kernels,
verification suites, renderings.

Reports are deterministic (byte-identical JSON for identical invocations) and
follow the schema tag brauer-report/1.  Exit codes: 0 all checks pass, 1 an
assertion failed, 2 usage or guard error.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .algebra import (
    block_radical_dim,
    block_descriptors,
    context,
    radical_basis,
    radical_summary,
    element_in_radical,
)
from .diagrams import (
    double_factorial,
    encode_diagram,
    enumerate_diagrams,
    enumerate_junctions,
    junction_count,
    parse_diagram,
    render_diagram,
)
from .linalg import (
    SpanBuilder,
    UnsupportedFieldError,
    intersect_with_coordinate_subspace,
    spans_equal,
)

SCHEMA = "brauer-report/1"
DEFAULT_MAX_F = 6
TENSOR_GUARD = 10**4


class GuardError(Exception):
    pass


def _max_f(force):
    if force:
        return 10**9
    return int(os.environ.get("BRAUER_MAX_F", DEFAULT_MAX_F))


def _parse_x(text):
    return Fraction(text)


def _check(name, ok, **extra):
    entry = {"name": name, "status": "pass" if ok else "fail"}
    entry.update(extra)
    return entry


def _info(name, **extra):
    entry = {"name": name, "status": "info"}
    entry.update(extra)
    return entry


# ---------------------------------------------------------------------------
# commands


def cmd_dims(args):
    f = args.f
    if f > max(7, _max_f(args.force)):
        raise GuardError(f"f={f} exceeds the counting guard")
    diagrams = enumerate_diagrams(f)
    by_arcs = {}
    for d in diagrams:
        by_arcs[d.arc_count] = by_arcs.get(d.arc_count, 0) + 1
    checks = [
        _check(
            "diagram count matches the double factorial",
            len(diagrams) == double_factorial(2 * f - 1),
            enumerated=len(diagrams),
            formula=double_factorial(2 * f - 1),
        )
    ]
    junction_rows = []
    for k in range(f // 2 + 1):
        enumerated = len(enumerate_junctions(f, k))
        formula = junction_count(f, k)
        junction_rows.append({"k": k, "enumerated": enumerated, "formula": formula})
        checks.append(
            _check(f"junction count at k={k}", enumerated == formula)
        )
    results = {
        "f": f,
        "diagrams": len(diagrams),
        "diagrams_by_arcs": {str(k): v for k, v in sorted(by_arcs.items())},
        "junctions": junction_rows,
    }
    return results, checks


def cmd_radical(args):
    f = args.f
    if f > _max_f(args.force):
        raise GuardError(f"f={f} exceeds the algebra guard")
    ctx = context(f, _parse_x(args.x))
    from .minors import deep_filtration_level, r_space_basis

    summary = radical_summary(ctx)
    results = {
        "f": f,
        "x": str(ctx.x),
        "dim": ctx.dim,
        "rad_dim": summary.dim,
        "method": summary.method,
    }
    checks = []
    x = Fraction(ctx.x)

    def radical_cut_dim(level):
        rad = radical_basis(ctx)
        inside = [
            i for i, d in enumerate(enumerate_diagrams(f)) if d.arc_count >= level
        ]
        return intersect_with_coordinate_subspace(
            [r.to_index_vector() for r in rad], inside
        )

    if x.denominator == 1 and (int(x) >= 0 or int(x) % 2 == 0):
        level = deep_filtration_level(f, int(x))
        deep = r_space_basis(ctx)
        results["deep_span_dim"] = len(deep)
        results["deep_level"] = level
        contained = all(element_in_radical(e) for e in deep)
        checks.append(
            _check("deep span contained in the trace-form radical", contained)
        )
        if summary.method == "exact":
            rad_deep = radical_cut_dim(level)
            equal = spans_equal(rad_deep, [e.to_index_vector() for e in deep])
            checks.append(
                _info(
                    "deep span equals the radical at its filtration level",
                    holds=bool(equal),
                    radical_at_level=len(rad_deep),
                    deep_span=len(deep),
                )
            )
    if args.level is not None and summary.method == "exact":
        results["radical_at_requested_level"] = len(radical_cut_dim(args.level))
    if args.dump_basis and summary.method == "exact":
        rad = radical_basis(ctx)
        results["basis"] = [
            sorted(
                (encode_diagram(d), str(c))
                for d, c in e.coeffs.items()
            )
            for e in rad
        ]
    return results, checks


def cmd_blocks(args):
    f = args.f
    if f > _max_f(args.force):
        raise GuardError(f"f={f} exceeds the algebra guard")
    ctx = context(f, _parse_x(args.x))
    rows = []
    total_sq = 0
    total_h2 = 0
    for desc in block_descriptors(f):
        h, r, rad = block_radical_dim(ctx, desc.k, desc.mu)
        rows.append(
            {
                "k": desc.k,
                "mu": list(desc.mu),
                "h": h,
                "rank": r,
                "rad_dim": rad,
                "simple_dim": r * r,
            }
        )
        total_sq += r * r
        total_h2 += h * h
    checks = [
        _check(
            "block sizes square-sum to the algebra dimension",
            total_h2 == ctx.dim,
            total=total_h2,
            dim=ctx.dim,
        )
    ]
    results = {
        "f": f,
        "x": str(ctx.x),
        "dim": ctx.dim,
        "blocks": rows,
        "semisimple_quotient_dim": total_sq,
        "rad_dim": ctx.dim - total_sq,
    }
    return results, checks


def cmd_kernel(args):
    from .minors import minor_span_basis, pfaffian_span_basis
    from .tensorrep import BilinearSpace, kernel_basis

    n, f = args.n, args.f
    if f > _max_f(args.force):
        raise GuardError(f"f={f} exceeds the algebra guard")
    if args.series == "orthogonal":
        space = BilinearSpace.orthogonal(n)
        ctx = context(f, n)
    else:
        space = BilinearSpace.symplectic(n)
        ctx = context(f, -2 * n)
    if space.dim**f > TENSOR_GUARD and not args.force:
        raise GuardError(
            f"tensor space dimension {space.dim}**{f} exceeds the guard {TENSOR_GUARD}"
        )
    kb = kernel_basis(ctx, space)
    if args.series == "orthogonal":
        span = minor_span_basis(ctx, n + 1)
    else:
        span = pfaffian_span_basis(ctx, n + 1)
    equal = spans_equal(
        [e.to_index_vector() for e in kb], [e.to_index_vector() for e in span]
    )
    results = {
        "series": args.series,
        "n": n,
        "f": f,
        "kernel_dim": len(kb),
        "span_dim": len(span),
    }
    checks = [_check("kernel equals the enumerated span", bool(equal))]
    return results, checks


def cmd_render(args):
    if args.diagram:
        d = parse_diagram(args.diagram)
        return render_diagram(d), None
    from .temperley import ChordDiagram, render_chord

    chords = json.loads(args.chord)
    c = ChordDiagram(2 * len(chords), [tuple(p) for p in chords])
    return render_chord(c), None


# ---------------------------------------------------------------------------
# verification suites


def _suite_thm4_8(args):
    sub = argparse.Namespace(
        series=args.series or "orthogonal", n=args.n or 1, f=args.f, force=args.force
    )
    return cmd_kernel(sub)


def _suite_thm5_3(args):
    from .minors import r_space_basis

    ctx = context(args.f, _parse_x(args.x if args.x is not None else str(args.n or 1)))
    deep = r_space_basis(ctx)
    contained = all(element_in_radical(e) for e in deep)
    results = {"f": args.f, "x": str(ctx.x), "deep_span_dim": len(deep)}
    return results, [_check("deep span contained in the radical", contained)]


def _suite_thm5_5(args):
    from .minors import (
        build_minor,
        build_pfaffian,
        deep_filtration_level,
        enumerate_minor_specs,
        enumerate_pfaffian_specs,
        minor_spec_min_arcs,
        pfaffian_spec_min_arcs,
    )

    f = args.f
    x = int(_parse_x(args.x)) if args.x is not None else (args.n or 1)
    ctx = context(f, x)
    level = deep_filtration_level(f, x)
    inside = outside = 0
    ok = True
    if x >= 0:
        n = x
        for spec in enumerate_minor_specs(f, n + 1):
            elem = build_minor(ctx, spec)
            deep = minor_spec_min_arcs(spec) >= level
            member = element_in_radical(elem)
            ok = ok and (member == deep)
            inside += deep
            outside += not deep
    else:
        half = (-x) // 2
        for spec in enumerate_pfaffian_specs(f, half + 1):
            elem = build_pfaffian(ctx, spec)
            deep = pfaffian_spec_min_arcs(spec) >= level
            member = element_in_radical(elem)
            ok = ok and (member == deep)
            inside += deep
            outside += not deep
    results = {
        "f": f,
        "x": str(ctx.x),
        "level": level,
        "deep_members": inside,
        "shallow_non_members": outside,
    }
    return results, [
        _check("membership in the radical is exactly depth in the filtration", ok)
    ]


def _suite_thm6_3(args):
    from .cells import act
    from .minors import r_space_basis
    from .temperley import (
        cube_zero_check,
        full_arc_diagrams,
        full_arc_junctions,
        tl_context,
        tl_module,
        tl_module_radical,
        tl_radical_basis,
        trace_element,
    )

    f = args.f
    if f % 2:
        raise GuardError("this suite needs even f")
    checks = []
    diagrams = full_arc_diagrams(f)
    n_diag = len(diagrams)
    expected_square = double_factorial(f - 1) ** 2
    claim_double = 2 * double_factorial(f - 1)
    checks.append(
        _info(
            "full-arc diagram count: enumeration vs the two closed forms",
            enumerated=n_diag,
            square_of_junction_count=expected_square,
            doubled_junction_count=claim_double,
            doubled_claim_matches=bool(n_diag == claim_double),
        )
    )
    basis = tl_radical_basis(f)
    checks.append(
        _check("trace-kernel dimension is the diagram count minus one",
               len(basis) == n_diag - 1)
    )
    checks.append(
        _check(
            "every difference has zero trace value",
            all(trace_element(b) == 0 for b in basis),
        )
    )
    checks.append(_check("trace-kernel cube vanishes", cube_zero_check(f, seed=args.seed or 0)))
    module = tl_module(f)
    mod_rad = tl_module_radical(f)
    checks.append(
        _check(
            "module trace-kernel dimension is the junction count minus one",
            len(mod_rad) == len(full_arc_junctions(f)) - 1,
        )
    )
    results = {"f": f, "full_arc_diagrams": n_diag, "trace_kernel_dim": len(basis)}
    if f <= 4:
        ctx = tl_context(f)
        rad = radical_basis(ctx)
        inside = [
            i
            for i, d in enumerate(enumerate_diagrams(f))
            if d.arc_count >= f // 2
        ]
        rad_deep = intersect_with_coordinate_subspace(
            [r.to_index_vector() for r in rad], inside
        )
        equal = spans_equal(rad_deep, [b.to_index_vector() for b in basis])
        checks.append(
            _check(
                "trace kernel equals the trace-form radical at the deepest level",
                bool(equal),
            )
        )
        deep = r_space_basis(ctx)
        eq2 = spans_equal(
            [e.to_index_vector() for e in deep], [b.to_index_vector() for b in basis]
        )
        checks.append(
            _info("deep-span identity at parameter one holds", holds=bool(eq2))
        )
        span_rm = SpanBuilder()
        for r in deep:
            for w in module.basis():
                vec = act(r, w)
                if not vec.is_zero():
                    span_rm.insert(vec.coords)
        mod_span = SpanBuilder()
        for v in mod_rad:
            mod_span.insert(v.coords)
        eq3 = span_rm.dim == mod_span.dim and all(
            mod_span.contains(r) for r in span_rm.basis()
        )
        checks.append(_info("module deep-action identity holds", holds=bool(eq3)))
    return results, checks


def _suite_brown(args):
    from .algebra import block_radical_lift
    f = args.f
    ctx = context(f, _parse_x(args.x if args.x is not None else "0"))
    checks = []
    results = {"f": f, "x": str(ctx.x), "blocks_with_radical": 0}
    for desc in block_descriptors(f):
        h, r, rad = block_radical_dim(ctx, desc.k, desc.mu)
        if rad == 0:
            continue
        results["blocks_with_radical"] += 1
        lift = block_radical_lift(ctx, desc.k, desc.mu)
        builder = SpanBuilder()
        prods = []
        for a in lift:
            for b in lift:
                p = a * b
                if builder.insert(p.to_index_vector()):
                    prods.append(p)
        ok = all(
            (p * c).filtration_project(desc.k + 1)[1].is_zero()
            for p in prods
            for c in lift
        )
        checks.append(
            _check(
                f"lifted radical cube vanishes modulo deeper levels (k={desc.k}, mu={list(desc.mu)})",
                ok,
                rad_dim=rad,
            )
        )
    return results, checks


def _suite_consistency(args):
    from .algebra import block_route_radical_dim, radical_dim_exact

    f = args.f
    ctx = context(f, _parse_x(args.x if args.x is not None else "0"))
    exact = radical_dim_exact(ctx)
    blocks = block_route_radical_dim(ctx)
    results = {
        "f": f,
        "x": str(ctx.x),
        "trace_form_rad_dim": exact,
        "block_route_rad_dim": blocks,
    }
    return results, [_check("the two radical routes agree", exact == blocks)]


def _suite_inherit(args):
    from .minors import inherited_radical_elements

    f = args.f
    ctx = context(f, _parse_x(args.x if args.x is not None else "0"))
    elems = inherited_radical_elements(ctx)
    ok = all(element_in_radical(e) for e in elems)
    results = {"f": f, "x": str(ctx.x), "inherited_elements": len(elems)}
    return results, [
        _check("arc-inserted deep elements land in the radical", ok)
    ]


SUITES = {
    "thm4_8": _suite_thm4_8,
    "thm5_3": _suite_thm5_3,
    "thm5_5": _suite_thm5_5,
    "thm6_3": _suite_thm6_3,
    "brown": _suite_brown,
    "consistency": _suite_consistency,
    "inherit": _suite_inherit,
}


def cmd_verify(args):
    if args.f > _max_f(args.force):
        raise GuardError(f"f={args.f} exceeds the algebra guard")
    return SUITES[args.suite](args)


# ---------------------------------------------------------------------------
# output plumbing


def _emit(report, fmt, stream):
    if fmt == "json":
        stream.write(json.dumps(report, sort_keys=True, separators=(",", ":")))
        stream.write("\n")
    elif fmt == "csv":
        stream.write("name,status,detail\n")
        for c in report.get("checks", []):
            detail = ";".join(
                f"{k}={v}" for k, v in sorted(c.items()) if k not in ("name", "status")
            )
            name = c["name"].replace('"', "'")
            stream.write(f'"{name}",{c["status"]},"{detail}"\n')
    else:
        stream.write(f"# {report['command']}  (schema {report['schema']})\n")
        for key, val in sorted(report.get("results", {}).items()):
            stream.write(f"{key}: {val}\n")
        for c in report.get("checks", []):
            extra = {
                k: v for k, v in c.items() if k not in ("name", "status")
            }
            suffix = f"  {extra}" if extra else ""
            stream.write(f"[{c['status'].upper()}] {c['name']}{suffix}\n")
        stream.write(f"status: {report['status']}\n")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="brauerkit",
        description="Exact computations in Brauer diagram algebras.",
        allow_abbrev=False,
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "--format", choices=("json", "csv", "text"), default="json", dest="fmt"
    )
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--force", action="store_true", help="override size guards")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", help="counting tables with formula cross-checks")
    p.add_argument("--f", type=int, required=True)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("radical", help="trace-form radical and deep-span flags")
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--x", type=str, required=True)
    p.add_argument("--level", type=int, default=None)
    p.add_argument("--dump-basis", action="store_true")
    p.set_defaults(func=cmd_radical)

    p = sub.add_parser("blocks", help="per-block structure table")
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--x", type=str, required=True)
    p.set_defaults(func=cmd_blocks)

    p = sub.add_parser("kernel", help="tensor-representation kernel vs span")
    p.add_argument("--series", choices=("orthogonal", "symplectic"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--f", type=int, required=True)
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--x", type=str, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--series", choices=("orthogonal", "symplectic"), default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="ASCII pictures of diagrams and chords")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--diagram", type=str)
    group.add_argument("--chord", type=str, help="JSON list of chord pairs")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except GuardError as exc:
        print(f"guard: {exc}", file=sys.stderr)
        return 2
    except (ValueError, UnsupportedFieldError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.command == "render":
        print(out[0])
        return 0
    results, checks = out
    checks = checks or []
    failed = any(c["status"] == "fail" for c in checks)
    echo = {k: v for k, v in vars(args).items() if k not in ("func", "fmt")}
    echo = {k: v for k, v in echo.items() if v is not None}
    report = {
        "schema": SCHEMA,
        "command": args.command,
        "params": {k: v for k, v in sorted(echo.items()) if k != "command"},
        "results": results,
        "checks": checks,
        "status": "fail" if failed else "pass",
    }
    _emit(report, args.fmt, sys.stdout)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
