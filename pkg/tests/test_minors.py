"""Diagrammatic minors and Pfaffians."""

import itertools
from fractions import Fraction

import pytest

from brauerkit import algebra as alg
from brauerkit import diagrams as dg
from brauerkit import minors as mn
from brauerkit.linalg import SpanBuilder


def idx_vectors(elems):
    return [e.to_index_vector() for e in elems]


I2 = dg.identity_diagram(2)
X2 = dg.make_d_sigma(dg.Permutation((2, 1)))
H2 = dg.make_h(1, 2, 2)


def test_spec_validation():
    with pytest.raises(ValueError):
        mn.MinorSpec(2, (1,), (2, 3), ((4, 4),))
    with pytest.raises(ValueError):
        mn.MinorSpec(2, (1, 2), (2, 3), ())
    with pytest.raises(ValueError):
        mn.PfaffianSpec(2, (1, 2, 3), ((4, 4),))
    spec = mn.MinorSpec(2, (1, 2), (3, 4), ())
    assert spec.order == 2 and spec.moving == (1, 2, 3, 4)


def test_phi_maps():
    assert mn.phi_V(2, [(1, 3), (2, 4)]) == I2
    assert mn.phi_V(2, [(1, 4), (2, 3)]) == X2
    eps, d = mn.phi_W(2, [(1, 2), (3, 4)])
    assert (eps, d) == (-1, H2)


def test_build_minor_examples():
    ctx = alg.context(2, 1)
    e = mn.build_minor(ctx, mn.MinorSpec(2, (1, 2), (3, 4), ()))
    assert e.coeffs == {I2: 1, X2: -1}
    e2 = mn.build_minor(ctx, mn.MinorSpec(2, (1, 3), (2, 4), ()))
    assert e2.coeffs == {H2: 1, X2: -1}
    # order 1: a single diagram
    e3 = mn.build_minor(ctx, mn.MinorSpec(2, (1,), (3,), ((2, 4),)))
    assert e3.coeffs == {I2: 1}


def test_minor_antisymmetry():
    ctx = alg.context(4, 2)
    spec = mn.MinorSpec(4, (1, 2, 3), (5, 6, 7), ((4, 8),))
    swapped = mn.MinorSpec(4, (1, 2, 3), (6, 5, 7), ((4, 8),))
    assert mn.build_minor(ctx, spec) == (-1) * mn.build_minor(ctx, swapped)
    rows_swapped = mn.MinorSpec(4, (2, 1, 3), (5, 6, 7), ((4, 8),))
    assert mn.build_minor(ctx, spec) == (-1) * mn.build_minor(ctx, rows_swapped)


def test_build_pfaffian_examples():
    ctx = alg.context(2, -2)
    p = mn.build_pfaffian(ctx, mn.PfaffianSpec(2, (1, 2, 3, 4), ()))
    assert set(p.coeffs) == {I2, X2, H2}
    assert len(set(p.coeffs.values())) == 1
    # order 2: a single diagram
    p2 = mn.build_pfaffian(ctx, mn.PfaffianSpec(2, (1, 3), ((2, 4),)))
    assert list(p2.coeffs) == [I2]
    # one fixed vertical at size three: a three-term sum
    ctx3 = alg.context(3, -2)
    p3 = mn.build_pfaffian(ctx3, mn.PfaffianSpec(3, (1, 2, 4, 5), ((3, 6),)))
    assert len(p3.coeffs) == 3
    assert len(set(p3.coeffs.values())) == 1


def test_pfaffian_ordering_invariance():
    # reordering the moving input changes nothing (canonical storage)
    ctx = alg.context(3, -2)
    a = mn.PfaffianSpec(3, (5, 1, 4, 2), ((3, 6),))
    b = mn.PfaffianSpec(3, (1, 2, 4, 5), ((3, 6),))
    assert a == b
    assert mn.build_pfaffian(ctx, a) == mn.build_pfaffian(ctx, b)


def test_enumeration_counts_and_span():
    specs = list(mn.enumerate_minor_specs(2, 2))
    assert len(specs) == 3
    ctx = alg.context(2, 1)
    builder = SpanBuilder()
    for s in specs:
        builder.insert(mn.build_minor(ctx, s).to_index_vector())
    assert builder.dim == 2
    assert list(mn.enumerate_minor_specs(2, 2, min_arcs=1)) == []
    assert len(list(mn.enumerate_minor_specs(4, 2))) == 630
    assert len(list(mn.enumerate_pfaffian_specs(4, 2))) == 210
    deep = list(mn.enumerate_minor_specs(4, 2, min_arcs=2))
    assert deep and all(mn.minor_spec_min_arcs(s) >= 2 for s in deep)


def test_min_arcs_formula_matches_brute_force():
    for f in (2, 3):
        ctx = alg.context(f, 1)
        ctxw = alg.context(f, -2)
        for r in range(1, f + 1):
            for spec in mn.enumerate_minor_specs(f, r):
                elem = mn.build_minor(ctx, spec)
                assert min(d.arc_count for d in elem.coeffs) == mn.minor_spec_min_arcs(spec)
            for spec in mn.enumerate_pfaffian_specs(f, r):
                elem = mn.build_pfaffian(ctxw, spec)
                assert min(d.arc_count for d in elem.coeffs) == mn.pfaffian_spec_min_arcs(spec)


def _check_multiply_oracle(ctx, spec, build):
    elem = build(ctx, spec)
    for d in dg.enumerate_diagrams(ctx.f):
        dd = alg.BrauerElement.of(ctx, d)
        for side in ("left", "right"):
            prod = dd * elem if side == "left" else elem * dd
            res = mn.multiply_diagram_spec(d, spec, side)
            if res is None:
                assert prod.is_zero(), (d, spec, side)
            else:
                e_exp, new_spec = res
                target = ctx.x_power(e_exp) * build(ctx, new_spec)
                assert prod == target or prod == (-1) * target, (d, spec, side)


def test_multiply_oracle_exhaustive_f2():
    ctx = alg.context(2, 1)
    for spec in mn.enumerate_minor_specs(2, 2):
        _check_multiply_oracle(ctx, spec, mn.build_minor)
    ctxw = alg.context(2, -2)
    for spec in mn.enumerate_pfaffian_specs(2, 2):
        _check_multiply_oracle(ctxw, spec, mn.build_pfaffian)


def test_multiply_oracle_sampled_f3_f4():
    ctx = alg.context(3, 1)
    for spec in itertools.islice(mn.enumerate_minor_specs(3, 2), 0, None, 4):
        _check_multiply_oracle(ctx, spec, mn.build_minor)
    ctxw = alg.context(3, -2)
    for spec in itertools.islice(mn.enumerate_pfaffian_specs(3, 2), 0, None, 5):
        _check_multiply_oracle(ctxw, spec, mn.build_pfaffian)
    ctx42 = alg.context(4, 2)
    for spec in itertools.islice(mn.enumerate_minor_specs(4, 3), 0, None, 37):
        _check_multiply_oracle(ctx42, spec, mn.build_minor)


def test_multiply_zero_law_spec_example():
    # a same-row arc on two moving vertices kills the product at the
    # matching parameter
    ctx = alg.context(2, 1)
    spec = mn.MinorSpec(2, (1, 2), (3, 4), ())
    assert mn.multiply_diagram_spec(H2, spec, "left") is None
    H_elem = alg.BrauerElement.of(ctx, H2)
    assert (H_elem * mn.build_minor(ctx, spec)).is_zero()
    # permutation diagrams relabel with no parameter factor
    for sigma in dg.all_permutations(2):
        res = mn.multiply_diagram_spec(dg.make_d_sigma(sigma), spec, "left")
        assert res is not None and res[0] == 0


def test_r_space_dims():
    assert len(mn.r_space_basis(alg.context(4, 0))) == 9
    assert len(mn.r_space_basis(alg.context(2, 1))) == 0
    assert len(mn.r_space_basis(alg.context(4, 1))) == 8
    with pytest.raises(ValueError):
        mn.r_space_basis(alg.context(3, -3))
    with pytest.raises(ValueError):
        mn.r_space_basis(alg.context(3, Fraction(1, 2)))


def test_deep_span_inside_radical():
    for f, x in ((2, 0), (3, 1), (4, 0), (4, 1), (4, 2), (4, -2)):
        ctx = alg.context(f, x)
        for e in mn.r_space_basis(ctx):
            assert alg.element_in_radical(e), (f, x)


def test_shallow_minors_outside_radical():
    for n in (1, 2):
        ctx = alg.context(4, n)
        level = mn.deep_filtration_level(4, n)
        for spec in mn.enumerate_minor_specs(4, n + 1):
            if mn.minor_spec_min_arcs(spec) < level:
                assert not alg.element_in_radical(mn.build_minor(ctx, spec))


def test_relabel_stability_of_kernel_span():
    # vertex relabelling preserves the span of the deep/kernel family
    from brauerkit.tensorrep import BilinearSpace, kernel_basis

    for f, n in ((2, 1), (3, 1), (3, 2)):
        ctx = alg.context(f, n)
        kb = kernel_basis(ctx, BilinearSpace.orthogonal(n))
        span = SpanBuilder()
        for e in kb:
            span.insert(e.to_index_vector())
        gens = [dg.Permutation.transposition(2 * f, i, i + 1) for i in range(1, 2 * f)]
        for e in kb:
            for pi in gens:
                moved = mn.relabel_element(pi, e)
                assert span.contains(moved.to_index_vector()), (f, n, pi)


def test_signed_relabel_stability_of_pairing_kernel():
    # the sign-twisted relabelling preserves the kernel on the skew side
    from brauerkit.tensorrep import BilinearSpace, kernel_basis

    for f in (2, 3):
        ctx = alg.context(f, -2)
        kb = kernel_basis(ctx, BilinearSpace.symplectic(1))
        span = SpanBuilder()
        for e in kb:
            span.insert(e.to_index_vector())
        gens = [dg.Permutation.transposition(2 * f, i, i + 1) for i in range(1, 2 * f)]
        for e in kb:
            for pi in gens:
                moved = mn.relabel_element(pi, e, signed=True)
                assert span.contains(moved.to_index_vector()), (f, pi)


def test_insertion_inherits_radical():
    for x in (0, 1, -2):
        ctx = alg.context(4, x)
        elems = mn.inherited_radical_elements(ctx)
        for e in elems:
            assert alg.element_in_radical(e), x
        # the inserted images also sit inside the larger deep span
        if x == 0:
            deep = SpanBuilder()
            for e in mn.r_space_basis(ctx):
                deep.insert(e.to_index_vector())
            for e in elems:
                assert deep.contains(e.to_index_vector())


def test_spec_text_round_trip():
    s = mn.MinorSpec(4, (1, 2), (5, 6), ((3, 4), (7, 8)))
    assert mn.spec_to_text(s) == "minor f=4 r=2 I=1,2 J=5,6 fixed=3-4,7-8"
    assert mn.parse_spec(mn.spec_to_text(s)) == s
    p = mn.PfaffianSpec(2, (1, 2, 3, 4), ())
    assert mn.parse_spec(mn.spec_to_text(p)) == p
    with pytest.raises(ValueError):
        mn.parse_spec("minor f=2 r=2 I=1 J=3 fixed=")
