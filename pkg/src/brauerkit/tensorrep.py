"""Tensor-power representations of the diagram algebra.

An orthogonal space of dimension n (identity form) or a symplectic space of
dimension 2n (standard skew form) turns the algebra with parameter n,
respectively -2n, into operators on the f-th tensor power: zero-arc diagrams
act by (signed) slot permutations, the one-arc generator by the
contraction-insertion operator built from the form and its dual tensor.

Operators are stored sparsely over multi-index pairs; kernels are computed
on the algebra side, never on the operator side.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as _cartesian

from .algebra import diagram_basis, element_from_index_vector
from .diagrams import factorize
from .linalg import column_relations, rref

ORTHOGONAL = "orthogonal"
SYMPLECTIC = "symplectic"


@dataclass(frozen=True)
class BilinearSpace:
    """Exact vector space with a fixed nondegenerate (skew-)symmetric form."""

    dim: int
    kind: str
    gram: tuple

    @staticmethod
    def orthogonal(n):
        gram = tuple(
            tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)
        )
        return BilinearSpace(n, ORTHOGONAL, gram)

    @staticmethod
    def symplectic(n):
        """Dimension 2n with the standard block form."""
        dim = 2 * n
        rows = []
        for i in range(dim):
            row = [Fraction(0)] * dim
            if i < n:
                row[n + i] = Fraction(1)
            else:
                row[i - n] = Fraction(-1)
            rows.append(tuple(row))
        return BilinearSpace(dim, SYMPLECTIC, tuple(rows))

    def form(self, i, j):
        return self.gram[i][j]

    @property
    def parameter(self):
        """Loop parameter realized by this space."""
        return self.dim if self.kind == ORTHOGONAL else -self.dim


def psi_tensor(space):
    """The rank-2 tensor mapped to the identity by the form isomorphism.

    Solves sum_i c[i][j] gram[i][l] = delta_{jl}; for the identity form this
    is the diagonal tensor, for the standard skew form the form matrix itself.
    """
    n = space.dim
    # Solve gram^T C = I by reduction of [gram^T | I].
    gt = [[space.gram[i][l] for i in range(n)] for l in range(n)]
    rows = [gt[l] + [Fraction(int(l == j)) for j in range(n)] for l in range(n)]
    reduced, pivots = rref(rows)
    if pivots != list(range(n)):
        raise ValueError("form matrix must be invertible")
    C = [[reduced[i][n + j] for j in range(n)] for i in range(n)]
    return {(i, j): C[i][j] for i in range(n) for j in range(n) if C[i][j]}


class TensorOperator:
    """Sparse exact operator on the f-th tensor power of a bilinear space."""

    __slots__ = ("space", "f", "entries")

    def __init__(self, space, f, entries=None):
        clean = {}
        for key, c in (entries or {}).items():
            c = Fraction(c)
            if c:
                clean[key] = c
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "entries", clean)

    @staticmethod
    def identity(space, f):
        entries = {}
        for idx in _cartesian(range(space.dim), repeat=f):
            entries[(idx, idx)] = Fraction(1)
        return TensorOperator(space, f, entries)

    def _check(self, other):
        if self.space != other.space or self.f != other.f:
            raise ValueError("operator spaces differ")

    def __add__(self, other):
        self._check(other)
        entries = dict(self.entries)
        for key, c in other.entries.items():
            entries[key] = entries.get(key, Fraction(0)) + c
        return TensorOperator(self.space, self.f, entries)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        return TensorOperator(
            self.space, self.f, {k: scalar * c for k, c in self.entries.items()}
        )

    def __matmul__(self, other):
        """Composition: self applied after other."""
        self._check(other)
        by_row = {}
        for (r, c), val in self.entries.items():
            by_row.setdefault(c, []).append((r, val))
        entries = {}
        for (m, c), val in other.entries.items():
            for r, val2 in by_row.get(m, ()):
                key = (r, c)
                entries[key] = entries.get(key, Fraction(0)) + val * val2
        return TensorOperator(self.space, self.f, entries)

    def is_zero(self):
        return not self.entries

    def rank(self):
        rows_idx = sorted({r for r, _ in self.entries})
        cols_idx = sorted({c for _, c in self.entries})
        col_pos = {c: i for i, c in enumerate(cols_idx)}
        dense = [[Fraction(0)] * len(cols_idx) for _ in rows_idx]
        row_pos = {r: i for i, r in enumerate(rows_idx)}
        for (r, c), val in self.entries.items():
            dense[row_pos[r]][col_pos[c]] = val
        from .linalg import rank as _rank

        return _rank(dense)

    def trace(self):
        return sum(
            (c for (r, col), c in self.entries.items() if r == col), Fraction(0)
        )

    def __eq__(self, other):
        return (
            isinstance(other, TensorOperator)
            and self.space == other.space
            and self.f == other.f
            and self.entries == other.entries
        )

    def __repr__(self):
        return (
            f"TensorOperator({self.space.kind} dim {self.space.dim}, f={self.f}, "
            f"{len(self.entries)} entries)"
        )


def permutation_operator(space, f, sigma, signed=False):
    """Slot permutation sending the input at slot sigma(i) to output slot i."""
    entries = {}
    scale = Fraction(sigma.sign() if signed else 1)
    for idx in _cartesian(range(space.dim), repeat=f):
        out = tuple(idx[sigma(i + 1) - 1] for i in range(f))
        entries[(out, idx)] = scale
    return TensorOperator(space, f, entries)


def tau(space, f, p, q):
    """Contract slots p and q with the form, then insert the dual tensor."""
    if p == q:
        raise ValueError("contraction slots must differ")
    if not (1 <= p <= f and 1 <= q <= f):
        raise ValueError(f"slots must lie in 1..{f}")
    psi = psi_tensor(space)
    entries = {}
    for idx in _cartesian(range(space.dim), repeat=f):
        scale = space.form(idx[p - 1], idx[q - 1])
        if not scale:
            continue
        for (s, t), c in psi.items():
            out = list(idx)
            out[p - 1] = s
            out[q - 1] = t
            key = (tuple(out), idx)
            entries[key] = entries.get(key, Fraction(0)) + scale * c
    return TensorOperator(space, f, entries)


@lru_cache(maxsize=None)
def _diagram_operator(space, f, diagram):
    """Image of one basis diagram via its canonical generator factorization."""
    sigma, k, rho = factorize(diagram)
    signed = space.kind == SYMPLECTIC
    op = permutation_operator(space, f, sigma, signed=signed)
    for t in range(1, k + 1):
        factor = tau(space, f, 2 * t - 1, 2 * t)
        if signed:
            factor = (-1) * factor
        op = op @ factor
    op = op @ permutation_operator(space, f, rho, signed=signed)
    return op


def standard_space(kind, n):
    """Orthogonal space of dimension n or symplectic space of dimension 2n."""
    if n < 1:
        raise ValueError("the series parameter n must be positive")
    if kind == ORTHOGONAL:
        return BilinearSpace.orthogonal(n)
    if kind == SYMPLECTIC:
        return BilinearSpace.symplectic(n)
    raise ValueError(f"unknown series {kind!r}")


def space_for_context(ctx, kind):
    """The bilinear space realizing the context's loop parameter (char 0)."""
    x = Fraction(ctx.x) if ctx.char == 0 else None
    if x is None or x.denominator != 1:
        raise ValueError("tensor representations need an integer parameter")
    n = int(x)
    if kind == ORTHOGONAL:
        if n < 1:
            raise ValueError("orthogonal series needs a positive parameter")
        return BilinearSpace.orthogonal(n)
    if n >= 0 or n % 2:
        raise ValueError("symplectic series needs parameter -2n")
    return BilinearSpace.symplectic(-n // 2)


def _parameter_matches(ctx, space):
    if ctx.char == 0:
        return Fraction(ctx.x) == space.parameter
    return ctx.field.coerce(space.parameter) == ctx.x


def pi(ctx, element, space):
    """Image of an algebra element; a homomorphism exactly because the space
    parameter equals the context parameter (checked)."""
    if not _parameter_matches(ctx, space):
        raise ValueError(
            f"space parameter {space.parameter} != context parameter {ctx.x}"
        )
    total = TensorOperator(space, ctx.f, {})
    for d, c in element.coeffs.items():
        op = _diagram_operator(space, ctx.f, d)
        total = total + Fraction(c) * op
    return total


def kernel_basis(ctx, space):
    """Exact nullspace of the algebra-to-operators map, on the algebra side."""
    basis = diagram_basis(ctx.f)
    field = ctx.field
    columns = []
    for d in basis:
        op = _diagram_operator(space, ctx.f, d)
        col = {}
        for (r, c), val in op.entries.items():
            col[(r, c)] = field.coerce(val)
        columns.append(col)
    relations = column_relations(columns, field)
    return [element_from_index_vector(ctx, rel) for rel in relations]
