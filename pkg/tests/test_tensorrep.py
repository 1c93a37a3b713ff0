"""Tensor-power representations and their kernels."""

from fractions import Fraction

import pytest

from brauerkit import algebra as alg
from brauerkit import diagrams as dg
from brauerkit import minors as mn
from brauerkit import tensorrep as tr
from brauerkit.linalg import spans_equal


def test_spaces_and_psi():
    o1 = tr.BilinearSpace.orthogonal(1)
    o2 = tr.BilinearSpace.orthogonal(2)
    s1 = tr.BilinearSpace.symplectic(1)
    assert o2.parameter == 2 and s1.parameter == -2
    assert tr.psi_tensor(o1) == {(0, 0): 1}
    assert tr.psi_tensor(o2) == {(0, 0): 1, (1, 1): 1}
    psi = tr.psi_tensor(s1)
    assert psi == {(0, 1): 1, (1, 0): -1}
    # defining property: contraction against the form gives the identity
    for space in (o2, s1, tr.BilinearSpace.symplectic(2)):
        psi = tr.psi_tensor(space)
        n = space.dim
        for j in range(n):
            for l in range(n):
                total = sum(
                    c * space.form(i, l) for (i, jj), c in psi.items() if jj == j
                )
                assert total == (1 if j == l else 0)


def test_tau_examples():
    o1 = tr.BilinearSpace.orthogonal(1)
    assert tr.tau(o1, 2, 1, 2) == tr.TensorOperator.identity(o1, 2)
    o2 = tr.BilinearSpace.orthogonal(2)
    t = tr.tau(o2, 2, 1, 2)
    assert t.rank() == 1 and t.trace() == 2
    assert t @ t == 2 * t  # square scales by the space dimension
    s1 = tr.BilinearSpace.symplectic(1)
    tw = tr.tau(s1, 2, 1, 2)
    # the generator maps to -tau and squares to (-2n) times itself, so tau
    # itself squares to +2n tau
    assert tw @ tw == 2 * tw
    assert tr.tau(o2, 2, 2, 1) == t  # generator is symmetric in its slots
    with pytest.raises(ValueError):
        tr.tau(o2, 2, 1, 1)
    with pytest.raises(ValueError):
        tr.tau(o2, 2, 0, 1)


def test_pi_collapse_at_small_dimension():
    ctx = alg.context(2, 1)
    space = tr.space_for_context(ctx, tr.ORTHOGONAL)
    one = tr.TensorOperator.identity(space, 2)
    for d in dg.enumerate_diagrams(2):
        assert tr.pi(ctx, alg.BrauerElement.of(ctx, d), space) == one


def test_pi_identity_and_parameter_check():
    ctx = alg.context(3, 2)
    space = tr.BilinearSpace.orthogonal(2)
    assert tr.pi(ctx, alg.BrauerElement.unit(ctx), space) == tr.TensorOperator.identity(space, 3)
    with pytest.raises(ValueError):
        tr.pi(alg.context(3, 1), alg.BrauerElement.unit(alg.context(3, 1)), space)


@pytest.mark.parametrize(
    "f,kind,x,n",
    [
        (2, tr.ORTHOGONAL, 1, 1),
        (2, tr.ORTHOGONAL, 2, 2),
        (2, tr.SYMPLECTIC, -2, 1),
        (2, tr.SYMPLECTIC, -4, 2),
        (3, tr.ORTHOGONAL, 1, 1),
        (3, tr.ORTHOGONAL, 2, 2),
        (3, tr.SYMPLECTIC, -2, 1),
        (3, tr.SYMPLECTIC, -4, 2),
    ],
)
def test_pi_homomorphism_exhaustive(f, kind, x, n):
    ctx = alg.context(f, x)
    space = tr.standard_space(kind, n)
    diagrams = dg.enumerate_diagrams(f)
    ops = {d: tr.pi(ctx, alg.BrauerElement.of(ctx, d), space) for d in diagrams}
    for a in diagrams:
        ea = alg.BrauerElement.of(ctx, a)
        for b in diagrams:
            eb = alg.BrauerElement.of(ctx, b)
            assert tr.pi(ctx, ea * eb, space) == ops[a] @ ops[b]


def test_generator_relation_mirrors_loop_parameter():
    # the one-arc generator squares to the parameter times itself, on both sides
    for f, kind, x, n in ((3, tr.ORTHOGONAL, 2, 2), (3, tr.SYMPLECTIC, -2, 1)):
        ctx = alg.context(f, x)
        space = tr.standard_space(kind, n)
        h = alg.BrauerElement.of(ctx, dg.make_h(1, 2, f))
        oph = tr.pi(ctx, h, space)
        assert oph @ oph == Fraction(x) * oph


def test_kernel_dims_small():
    assert len(tr.kernel_basis(alg.context(2, 1), tr.BilinearSpace.orthogonal(1))) == 2
    assert len(tr.kernel_basis(alg.context(2, -2), tr.BilinearSpace.symplectic(1))) == 1
    assert len(tr.kernel_basis(alg.context(2, 2), tr.BilinearSpace.orthogonal(2))) == 0
    assert len(tr.kernel_basis(alg.context(3, 3), tr.BilinearSpace.orthogonal(3))) == 0


def test_kernel_vectors_map_to_zero():
    ctx = alg.context(3, 1)
    space = tr.BilinearSpace.orthogonal(1)
    for e in tr.kernel_basis(ctx, space):
        assert tr.pi(ctx, e, space).is_zero()


@pytest.mark.parametrize("f", (2, 3, 4))
@pytest.mark.parametrize("n", (1, 2))
def test_kernel_equals_minor_span_orthogonal(f, n):
    ctx = alg.context(f, n)
    kb = tr.kernel_basis(ctx, tr.BilinearSpace.orthogonal(n))
    span = mn.minor_span_basis(ctx, n + 1)
    assert spans_equal(
        [e.to_index_vector() for e in kb], [e.to_index_vector() for e in span]
    )


@pytest.mark.parametrize("f", (2, 3, 4))
def test_kernel_equals_pfaffian_span_symplectic(f):
    ctx = alg.context(f, -2)
    kb = tr.kernel_basis(ctx, tr.BilinearSpace.symplectic(1))
    span = mn.pfaffian_span_basis(ctx, 2)
    assert spans_equal(
        [e.to_index_vector() for e in kb], [e.to_index_vector() for e in span]
    )


def test_radical_inside_kernel():
    for f, x, kind, n in ((3, 1, tr.ORTHOGONAL, 1), (4, 2, tr.ORTHOGONAL, 2), (4, -2, tr.SYMPLECTIC, 1)):
        ctx = alg.context(f, x)
        space = tr.standard_space(kind, n)
        for r in alg.radical_basis(ctx):
            assert tr.pi(ctx, r, space).is_zero(), (f, x)


def test_kernel_over_prime_field():
    # the kernel computation also runs over a prime field larger than f
    ctx = alg.context(2, 1, char=7)
    kb = tr.kernel_basis(ctx, tr.BilinearSpace.orthogonal(1))
    assert len(kb) == 2
    ctxw = alg.context(2, 5, char=7)  # -2 mod 7
    kbw = tr.kernel_basis(ctxw, tr.BilinearSpace.symplectic(1))
    assert len(kbw) == 1
