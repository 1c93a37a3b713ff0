"""Acceptance criteria.

Every criterion asserts exact equalities (rational/integer arithmetic, zero
tolerance) and prints one PASS/FAIL line; run with ``pytest -s`` to see the
lines as they stream.
"""

import time
from math import factorial

from brauerkit import algebra as alg
from brauerkit import cells
from brauerkit import diagrams as dg
from brauerkit import minors as mn
from brauerkit import temperley as tl
from brauerkit import tensorrep as tr
from brauerkit.linalg import (
    SpanBuilder,
    intersect_with_coordinate_subspace,
    spans_equal,
)


def report(number, ok, detail):
    line = f"ACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} - {detail}"
    print(line)
    assert ok, line


def test_criterion_1_counting():
    start = time.perf_counter()
    ok = True
    for f in range(1, 7):
        diagrams = dg.enumerate_diagrams(f)
        ok = ok and len(diagrams) == dg.double_factorial(2 * f - 1)
        for k in range(f // 2 + 1):
            ok = ok and len(dg.enumerate_junctions(f, k)) == dg.junction_count(f, k)
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 1.0
    report(1, ok, f"diagram and junction counts match formulas for f <= 6 in {elapsed:.2f}s")


def test_criterion_2_semisimplicity_table():
    xs = (0, 1, 2, 3, 4, -2, -4)
    ok = True
    details = []
    for f in range(1, 5):
        for x in xs:
            expected = alg.semisimplicity_criterion(f, x).semisimple
            got = alg.radical_dim_exact(alg.context(f, x)) == 0
            ok = ok and got == expected
            if got != expected:
                details.append(f"(f={f},x={x})")
    for x in xs:
        expected = alg.semisimplicity_criterion(5, x).semisimple
        ctx = alg.context(5, x)
        if expected:
            # full modular rank certifies a trivial radical exactly
            ok = ok and alg.radical_dim_modular(ctx) == 0
        else:
            cert = alg.radical_certificate(ctx)
            ok = ok and cert is not None and alg.element_in_radical(cert)
        if not ok:
            details.append(f"(f=5,x={x})")
            break
    report(2, ok, "trace-form radical vanishes exactly on the semisimple table "
                  f"for f <= 5, x in {xs}" + (f"; failures {details}" if details else ""))


def test_criterion_3_two_route_consistency():
    xs = (0, 1, -1, 2, -2, 7)
    ok = True
    for f in range(1, 5):
        for x in xs:
            ctx = alg.context(f, x)
            squares = sum(
                alg.block_radical_dim(ctx, d.k, d.mu)[1] ** 2
                for d in alg.block_descriptors(f)
            )
            ok = ok and ctx.dim - alg.radical_dim_exact(ctx) == squares
    report(3, ok, f"trace-form and block-rank radical dimensions agree for f <= 4, x in {xs}")


def test_criterion_4_kernel_equals_span():
    start = time.perf_counter()
    ok = True
    desk = {}
    for f in (2, 3, 4):
        for n in (1, 2):
            ctx = alg.context(f, n)
            kb = tr.kernel_basis(ctx, tr.BilinearSpace.orthogonal(n))
            span = mn.minor_span_basis(ctx, n + 1)
            ok = ok and spans_equal(
                [e.to_index_vector() for e in kb],
                [e.to_index_vector() for e in span],
            )
            desk[("orth", n, f)] = len(kb)
        ctxw = alg.context(f, -2)
        kbw = tr.kernel_basis(ctxw, tr.BilinearSpace.symplectic(1))
        spanw = mn.pfaffian_span_basis(ctxw, 2)
        ok = ok and spans_equal(
            [e.to_index_vector() for e in kbw],
            [e.to_index_vector() for e in spanw],
        )
        desk[("symp", 1, f)] = len(kbw)
    ok = ok and desk[("orth", 1, 2)] == 2 and desk[("symp", 1, 2)] == 1
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 60.0
    report(4, ok, f"tensor kernels equal enumerated spans both ways in {elapsed:.1f}s "
                  f"(desk: ker_orth(1,2)={desk[('orth',1,2)]}, ker_symp(1,2)={desk[('symp',1,2)]})")


def test_criterion_5_radical_dichotomy_f4():
    ok = True
    for n in (1, 2):
        ctx = alg.context(4, n)
        level = mn.deep_filtration_level(4, n)
        for spec in mn.enumerate_minor_specs(4, n + 1):
            member = alg.element_in_radical(mn.build_minor(ctx, spec))
            ok = ok and member == (mn.minor_spec_min_arcs(spec) >= level)
    ctxw = alg.context(4, -2)
    level = mn.deep_filtration_level(4, -2)
    for spec in mn.enumerate_pfaffian_specs(4, 2):
        member = alg.element_in_radical(mn.build_pfaffian(ctxw, spec))
        ok = ok and member == (mn.pfaffian_spec_min_arcs(spec) >= level)
    report(5, ok, "every deep minor/pairing-sum is radical, every shallow one is not "
                  "(f=4, exhaustive, both series)")


def test_criterion_6_degenerate_top_block():
    ok = True
    for f in (2, 4):
        half = f // 2
        sm = alg.block_structure_matrix(alg.context(f, 0), half, ())
        zero = all(v == 0 for row in sm.entries for v in row)
        h, r, rad = alg.block_radical_dim(alg.context(f, 0), half, ())
        enumerated = len(dg.enumerate_junctions(f, half))
        ok = ok and zero and r == 0 and rad == h * h
        ok = ok and h == enumerated == dg.double_factorial(f - 1)
    report(6, ok, "zero-parameter top block is identically zero with square radical "
                  "(f in {2,4}, h = junction count by enumeration)")


def test_criterion_7_full_arc_level():
    start = time.perf_counter()
    ok = True
    counts = {}
    for f in (2, 4, 6):
        diagrams = tl.full_arc_diagrams(f)
        counts[f] = len(diagrams)
        basis = tl.tl_radical_basis(f)
        ok = ok and len(basis) == len(diagrams) - 1
        ok = ok and all(tl.trace_element(b) == 0 for b in basis)
        ok = ok and tl.cube_zero_check(f, samples=10000, seed=0)
        ok = ok and len(tl.tl_module_radical(f)) == dg.double_factorial(f - 1) - 1
    ok = ok and counts[4] == 9 and counts[6] == 225
    doubled_claim_holds = counts[4] == 2 * dg.double_factorial(3)
    # quotient of the deepest level by the trace kernel is one-dimensional
    for f in (2, 4, 6):
        ok = ok and counts[f] - len(tl.tl_radical_basis(f)) == 1
    # at f=4 the trace kernel is exactly the radical cut to the deepest level
    ctx = tl.tl_context(4)
    rad = alg.radical_basis(ctx)
    inside = [i for i, d in enumerate(alg.diagram_basis(4)) if d.arc_count >= 2]
    rad_deep = intersect_with_coordinate_subspace(
        [r.to_index_vector() for r in rad], inside
    )
    ok = ok and spans_equal(
        rad_deep, [b.to_index_vector() for b in tl.tl_radical_basis(4)]
    )
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 60.0
    report(7, ok, f"full-arc trace kernels verified (counts {counts}, the doubled "
                  f"closed-form claim holds: {doubled_claim_holds}) in {elapsed:.1f}s")


def test_criterion_8_nilpotency_bound():
    ok = True
    checked = 0
    for x in (0, 1, 2, -2, 7):
        for f in (2, 3, 4):
            ctx = alg.context(f, x)
            for desc in alg.block_descriptors(f):
                h, r, rad = alg.block_radical_dim(ctx, desc.k, desc.mu)
                if rad == 0:
                    continue
                checked += 1
                lift = alg.block_radical_lift(ctx, desc.k, desc.mu)
                ok = ok and len(lift) == rad
                builder = SpanBuilder()
                prods = []
                for a in lift:
                    for b in lift:
                        p = a * b
                        if builder.insert(p.to_index_vector()):
                            prods.append(p)
                ok = ok and all(
                    (p * c).filtration_project(desc.k + 1)[1].is_zero()
                    for p in prods
                    for c in lift
                )
    report(8, ok, f"lifted block radicals cube to the deeper level ({checked} blocks, f <= 4)")


def test_criterion_9_inherited_radical():
    ok = True
    total = 0
    for x in (0, 1, -2):
        ctx = alg.context(4, x)
        elems = mn.inherited_radical_elements(ctx)
        total += len(elems)
        ok = ok and all(alg.element_in_radical(e) for e in elems)
    report(9, ok, f"arc-inserted deep elements lie in the radical (f=4, x in 0,1,-2; "
                  f"{total} elements)")


def test_criterion_10_homomorphism():
    ok = True
    for f in (2, 3):
        for kind, x, n in (
            (tr.ORTHOGONAL, 1, 1),
            (tr.ORTHOGONAL, 2, 2),
            (tr.SYMPLECTIC, -2, 1),
            (tr.SYMPLECTIC, -4, 2),
        ):
            ctx = alg.context(f, x)
            space = tr.standard_space(kind, n)
            diagrams = dg.enumerate_diagrams(f)
            ops = {d: tr.pi(ctx, alg.BrauerElement.of(ctx, d), space) for d in diagrams}
            for a in diagrams:
                ea = alg.BrauerElement.of(ctx, a)
                for b in diagrams:
                    prod = tr.pi(ctx, ea * alg.BrauerElement.of(ctx, b), space)
                    if prod != ops[a] @ ops[b]:
                        ok = False
    report(10, ok, "representation is multiplicative on all basis pairs "
                   "(f <= 3, both series, n <= 2)")


def test_criterion_11_deep_span_identities_reported():
    lines = []
    must_hold_ok = True
    for f in (2, 3, 4):
        for x in (0, 1, 2, -2):
            ctx = alg.context(f, x)
            level = mn.deep_filtration_level(f, int(x))
            deep = mn.r_space_basis(ctx)
            rad = alg.radical_basis(ctx)
            inside = [
                i
                for i, d in enumerate(alg.diagram_basis(f))
                if d.arc_count >= level
            ]
            rad_deep = intersect_with_coordinate_subspace(
                [r.to_index_vector() for r in rad], inside
            )
            holds = spans_equal(rad_deep, [e.to_index_vector() for e in deep])
            lines.append(f"(f={f},x={x}):{'holds' if holds else 'fails'}")
            if x == 1 and f % 2 == 0:
                must_hold_ok = must_hold_ok and holds
    # module-level identities at the deepest level, parameter one
    for f in (2, 4):
        ctx = alg.context(f, 1)
        module = cells.CellModule(ctx, f // 2, ())
        _, contained, equals = cells.check_R_action(module, mn.r_space_basis(ctx))
        lines.append(f"(module f={f},x=1):{'holds' if equals else 'fails'}")
        must_hold_ok = must_hold_ok and contained and equals
    print("ACCEPTANCE 11 info: deep-span identity " + " ".join(lines))
    report(11, must_hold_ok,
           "identities reported; the even-size parameter-one instances hold")
