"""The diagram algebra on two rows of f vertices with loop parameter x.

Elements are sparse rational (or prime-field) combinations of diagrams; the
product is x^loops times the pruned composite.  The module provides the
standard filtration by arc count, the block decomposition of its factors
through structure-constant matrices, and two independent radical routes:

* the trace form of the left regular representation (characteristic zero),
  with exact elimination at small size and certified modular rank above it;
* per-block ranks of the structure-constant matrices.

Their agreement is an acceptance-tested identity, not an assumption.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .backend import compose_table
from .diagrams import (
    compose_diagrams,
    diagram_from_parts,
    enumerate_diagrams,
    enumerate_junctions,
    glue_junctions,
    identity_diagram,
)
from .linalg import (
    QQ,
    MODULAR_PRIMES,
    PrimeField,
    UnsupportedFieldError,
    bareiss_rank,
    modular_rank,
    nullspace,
)
from .symgroup import partitions, specht_module, standard_tableau_count


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class AlgebraContext:
    """Size f, loop parameter x, and coefficient field (char 0 or prime > f)."""

    f: int
    x: Fraction
    char: int = 0

    def __post_init__(self):
        if self.f < 1:
            raise ValueError("f must be positive")
        if self.char != 0:
            if not _is_prime(self.char):
                raise ValueError("characteristic must be 0 or prime")
            if self.char <= self.f:
                raise UnsupportedFieldError(
                    f"characteristic must exceed f={self.f}, got {self.char}"
                )

    @property
    def field(self):
        return QQ if self.char == 0 else PrimeField(self.char)

    @property
    def dim(self):
        from .diagrams import double_factorial

        return double_factorial(2 * self.f - 1)

    def x_power(self, c):
        return self.field.coerce(self.x) ** c if self.char == 0 else pow(
            self.field.coerce(self.x), c, self.char
        )

    def __repr__(self):
        tag = "" if self.char == 0 else f"; char {self.char}"
        return f"AlgebraContext(f={self.f}, x={self.x}{tag})"


def context(f, x, char=0):
    """Normalized constructor: x is stored exactly in the chosen field."""
    if char == 0:
        x = Fraction(x)
    else:
        x = PrimeField(char).coerce(Fraction(x) if not isinstance(x, int) else x)
    return AlgebraContext(f, x, char)


class BrauerElement:
    """Sparse linear combination of diagrams in a fixed context."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs=None):
        field = ctx.field
        clean = {}
        for d, c in (coeffs or {}).items():
            if d.f != ctx.f:
                raise ValueError("diagram size does not match the context")
            c = field.coerce(c)
            if c != field.zero:
                clean[d] = c
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coeffs", clean)

    @staticmethod
    def zero(ctx):
        return BrauerElement(ctx, {})

    @staticmethod
    def unit(ctx):
        return BrauerElement(ctx, {identity_diagram(ctx.f): 1})

    @staticmethod
    def of(ctx, diagram, coeff=1):
        return BrauerElement(ctx, {diagram: coeff})

    def _check(self, other):
        if self.ctx != other.ctx:
            raise ValueError("context mismatch")

    def __add__(self, other):
        self._check(other)
        field = self.ctx.field
        coeffs = dict(self.coeffs)
        for d, c in other.coeffs.items():
            coeffs[d] = field.add(coeffs.get(d, field.zero), c)
        return BrauerElement(self.ctx, coeffs)

    def __sub__(self, other):
        self._check(other)
        field = self.ctx.field
        coeffs = dict(self.coeffs)
        for d, c in other.coeffs.items():
            coeffs[d] = field.sub(coeffs.get(d, field.zero), c)
        return BrauerElement(self.ctx, coeffs)

    def __neg__(self):
        field = self.ctx.field
        return BrauerElement(self.ctx, {d: field.neg(c) for d, c in self.coeffs.items()})

    def __rmul__(self, scalar):
        field = self.ctx.field
        scalar = field.coerce(scalar)
        return BrauerElement(
            self.ctx, {d: field.mul(scalar, c) for d, c in self.coeffs.items()}
        )

    def __mul__(self, other):
        if not isinstance(other, BrauerElement):
            return NotImplemented
        self._check(other)
        field = self.ctx.field
        coeffs = {}
        for da, ca in self.coeffs.items():
            for db, cb in other.coeffs.items():
                prod, loops = compose_diagrams(da, db)
                c = field.mul(field.mul(ca, cb), self.ctx.x_power(loops))
                acc = field.add(coeffs.get(prod, field.zero), c)
                coeffs[prod] = acc
        return BrauerElement(self.ctx, coeffs)

    def is_zero(self):
        return not self.coeffs

    def min_arcs(self):
        """Smallest arc count over the support (f//2 + 1 for the zero element)."""
        if not self.coeffs:
            return self.ctx.f // 2 + 1
        return min(d.arc_count for d in self.coeffs)

    def filtration_project(self, k):
        """Split into (part with >= k arcs, part with < k arcs)."""
        deep, rest = {}, {}
        for d, c in self.coeffs.items():
            (deep if d.arc_count >= k else rest)[d] = c
        return BrauerElement(self.ctx, deep), BrauerElement(self.ctx, rest)

    def to_index_vector(self):
        index = diagram_index(self.ctx.f)
        return {index[d]: c for d, c in self.coeffs.items()}

    def __eq__(self, other):
        return (
            isinstance(other, BrauerElement)
            and self.ctx == other.ctx
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ctx, frozenset(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return f"BrauerElement({self.ctx!r}: 0)"
        terms = " + ".join(
            f"({c})*{d!r}" for d, c in sorted(self.coeffs.items(), key=lambda t: t[0])
        )
        return f"BrauerElement({terms})"


def element_from_index_vector(ctx, vec):
    basis = diagram_basis(ctx.f)
    return BrauerElement(ctx, {basis[i]: c for i, c in vec.items()})


@lru_cache(maxsize=None)
def diagram_basis(f):
    return tuple(enumerate_diagrams(f))


@lru_cache(maxsize=None)
def _diagram_index(f):
    return {d: i for i, d in enumerate(diagram_basis(f))}


def diagram_index(f):
    return _diagram_index(f)


class FiltrationView:
    """The two-sided ideal spanned by diagrams with at least k arcs."""

    def __init__(self, ctx, k):
        if not 0 <= k <= ctx.f // 2 + 1:
            raise ValueError("filtration level out of range")
        self.ctx = ctx
        self.k = k

    def basis_diagrams(self):
        return tuple(d for d in diagram_basis(self.ctx.f) if d.arc_count >= self.k)

    def contains(self, element):
        return element.min_arcs() >= self.k

    def project(self, element):
        return element.filtration_project(self.k)


def filtration_project(element, k):
    return element.filtration_project(k)


# ---------------------------------------------------------------------------
# composition table and trace form


@lru_cache(maxsize=None)
def composition_table(f):
    """(sorted diagrams, product index matrix, loop count matrix).

    Quadratic in the diagram count: a few MB at f = 5, around a GB at f = 6;
    the deep-filtration routines avoid it above f = 5.
    """
    basis = diagram_basis(f)
    mat = np.frombuffer(
        b"".join(d.partner for d in basis), dtype=np.uint8
    ).reshape(len(basis), 2 * f)
    idx, loops = compose_table(np.ascontiguousarray(mat), f)
    return basis, idx, loops


def _x_as_int(ctx):
    if ctx.char != 0:
        return None
    x = Fraction(ctx.x)
    return int(x) if x.denominator == 1 else None


@lru_cache(maxsize=16)
def _trace_form_int_cached(f, x_int):
    basis, idx, loops = composition_table(f)
    n = len(basis)
    max_loops = int(loops.max()) if n else 0
    pows = np.array([x_int**e for e in range(max_loops + 1)], dtype=np.int64)
    xl = pows[loops]
    fixed = idx == np.arange(n, dtype=np.int32)[None, :]
    tr_left = (xl * fixed).sum(axis=1)
    return xl * tr_left[idx]


def trace_form_rows(ctx):
    """The bilinear form tr(L_a L_b) on the diagram basis, as exact rows."""
    if ctx.char != 0:
        raise UnsupportedFieldError("the trace-form radical requires characteristic 0")
    x_int = _x_as_int(ctx)
    if x_int is not None:
        mat = _trace_form_int_cached(ctx.f, x_int)
        return [[int(v) for v in row] for row in mat]
    basis, idx, loops = composition_table(ctx.f)
    n = len(basis)
    x = Fraction(ctx.x)
    max_loops = int(loops.max()) if n else 0
    pows = [x**e for e in range(max_loops + 1)]
    tr_left = []
    for i in range(n):
        total = Fraction(0)
        row_idx, row_loops = idx[i], loops[i]
        for j in range(n):
            if row_idx[j] == j:
                total += pows[row_loops[j]]
        tr_left.append(total)
    return [
        [pows[loops[i, j]] * tr_left[idx[i, j]] for j in range(n)] for i in range(n)
    ]


@lru_cache(maxsize=None)
def radical_basis(ctx):
    """Exact basis of the trace-form radical (characteristic zero).

    Practical up to f = 4; larger sizes should use radical_summary.
    """
    rows = trace_form_rows(ctx)
    basis = diagram_basis(ctx.f)
    vectors = nullspace(rows, ncols=len(basis))
    return tuple(
        BrauerElement(ctx, {basis[i]: c for i, c in enumerate(vec) if c})
        for vec in vectors
    )


def radical_dim_exact(ctx):
    """dim of the trace-form radical by fraction-free integer elimination."""
    rows = trace_form_rows(ctx)
    if rows and isinstance(rows[0][0], Fraction):
        scale = 1
        for row in rows:
            for v in row:
                scale = scale * v.denominator // _gcd(scale, v.denominator)
        rows = [[int(v * scale) for v in row] for row in rows]
    return len(rows) - bareiss_rank(rows)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def radical_dim_modular(ctx, primes=MODULAR_PRIMES):
    """Nullity of the trace form modulo fixed primes: an upper bound on the
    exact radical dimension, with equality certified when it returns 0."""
    x_int = _x_as_int(ctx)
    if x_int is None:
        raise ValueError("modular route needs an integer loop parameter")
    if ctx.char != 0:
        raise UnsupportedFieldError("the trace-form radical requires characteristic 0")
    mat = _trace_form_int_cached(ctx.f, x_int)
    return mat.shape[0] - modular_rank(mat, primes)


def element_in_radical(element):
    """Exact membership in the trace-form radical: T v = 0 over the integers."""
    ctx = element.ctx
    if ctx.char != 0:
        raise UnsupportedFieldError("the trace-form radical requires characteristic 0")
    vec = element.to_index_vector()
    if not vec:
        return True
    scale = 1
    for c in vec.values():
        den = Fraction(c).denominator
        scale = scale * den // _gcd(scale, den)
    ivec = {i: int(Fraction(c) * scale) for i, c in vec.items()}
    cols = sorted(ivec)
    x_int = _x_as_int(ctx)
    if x_int is not None:
        mat = _trace_form_int_cached(ctx.f, x_int)
        sub = mat[:, cols].astype(object)
        coeffs = np.array([ivec[c] for c in cols], dtype=object)
        return not np.any(sub @ coeffs)
    rows = trace_form_rows(ctx)
    return all(sum(row[j] * ivec[j] for j in cols) == 0 for row in rows)


def radical_certificate(ctx):
    """A nonzero exact trace-form null vector, if the deep filtration span
    provides one; None otherwise."""
    from .minors import r_space_generators

    try:
        candidates = r_space_generators(ctx)
    except ValueError:
        return None
    for cand in candidates:
        if not cand.is_zero() and element_in_radical(cand):
            return cand
    return None


@dataclass(frozen=True)
class RadicalSummary:
    dim: int
    method: str  # "exact" | "modular"
    certified_zero: bool
    certified_positive: bool


def radical_summary(ctx, exact_limit=4):
    """Radical dimension with certification flags (see ledger of methods)."""
    if ctx.f <= exact_limit or _x_as_int(ctx) is None:
        dim = radical_dim_exact(ctx)
        return RadicalSummary(dim, "exact", dim == 0, dim > 0)
    dim = radical_dim_modular(ctx)
    if dim == 0:
        return RadicalSummary(0, "modular", True, False)
    positive = radical_certificate(ctx) is not None
    return RadicalSummary(dim, "modular", False, positive)


# ---------------------------------------------------------------------------
# blocks of the filtration factors


@dataclass(frozen=True)
class BlockDescriptor:
    """One block of the k-th filtration factor: arc level k and a partition
    of the f-2k vertical strands."""

    k: int
    mu: tuple
    junction_count: int
    specht_dim: int

    @property
    def h(self):
        return self.specht_dim * self.junction_count


def block_descriptors(f):
    out = []
    for k in range(f // 2 + 1):
        jc = len(enumerate_junctions(f, k))
        for mu in partitions(f - 2 * k):
            out.append(BlockDescriptor(k, mu, jc, standard_tableau_count(mu)))
    return out


@dataclass(frozen=True)
class StructureMatrix:
    block: BlockDescriptor
    entries: tuple  # h x h tuple of tuples, exact scalars

    @property
    def size(self):
        return len(self.entries)


def _require_char_zero(ctx, what):
    if ctx.char != 0:
        raise UnsupportedFieldError(f"{what} requires characteristic 0")


def block_structure_matrix(ctx, k, mu):
    """Structure-constant matrix of the (k, mu) block.

    Basis index is (module coordinate, junction), module-coordinate major.
    The (b, w) x (c, v) entry is x^loops * rho(pi)[b][c] for the gluing of
    bottom junction w with top junction v, zero when the gluing drops deeper
    into the filtration.
    """
    mu = tuple(mu)
    _require_char_zero(ctx, "block structure data")
    if sum(mu) != ctx.f - 2 * k:
        raise ValueError(f"partition {mu} must have size f-2k = {ctx.f - 2 * k}")
    junctions = enumerate_junctions(ctx.f, k)
    mod = specht_module(mu)
    d = mod.dim
    nj = len(junctions)
    h = d * nj
    x = Fraction(ctx.x)
    entries = [[Fraction(0)] * h for _ in range(h)]
    for wi, w in enumerate(junctions):
        for vi, v in enumerate(junctions):
            glued = glue_junctions(w, v)
            if glued is None:
                continue
            loops, pi = glued
            rho = mod.matrix(pi)
            scale = x**loops
            for b in range(d):
                row = entries[b * nj + wi]
                for c in range(d):
                    val = rho[b][c]
                    if val:
                        row[c * nj + vi] = scale * val
    desc = BlockDescriptor(k, mu, nj, d)
    return StructureMatrix(desc, tuple(tuple(row) for row in entries))


def structure_matrix_rank(sm):
    rows = [list(row) for row in sm.entries]
    if not rows:
        return 0
    scale = 1
    for row in rows:
        for v in row:
            den = Fraction(v).denominator
            scale = scale * den // _gcd(scale, den)
    int_rows = [[int(Fraction(v) * scale) for v in row] for row in rows]
    return bareiss_rank(int_rows)


def block_radical_dim(ctx, k, mu):
    """(h, rank, rad_dim) with rad_dim = h^2 - rank^2."""
    sm = block_structure_matrix(ctx, k, mu)
    h = sm.size
    r = structure_matrix_rank(sm)
    return h, r, h * h - r * r


def semisimple_quotient_dims(ctx):
    """Per-block table [(k, mu, h, rank, simple_dim)] with simple_dim = rank^2."""
    _require_char_zero(ctx, "the semisimple quotient table")
    out = []
    for desc in block_descriptors(ctx.f):
        h, r, rad = block_radical_dim(ctx, desc.k, desc.mu)
        out.append((desc.k, desc.mu, h, r, r * r))
    return out


def block_route_radical_dim(ctx):
    """dim of the algebra minus the sum of squared structure-matrix ranks."""
    total = 0
    for desc in block_descriptors(ctx.f):
        _, r, _ = block_radical_dim(ctx, desc.k, desc.mu)
        total += r * r
    return ctx.dim - total


def boxtimes(ctx, u, top, bottom):
    """Linear map sending a group-algebra element tensor two junctions to the
    spanned combination of diagrams with that arc structure."""
    coeffs = {}
    for perm, c in u.coeffs.items():
        coeffs[diagram_from_parts(perm, top, bottom)] = c
    return BrauerElement(ctx, coeffs)


def block_radical_lift(ctx, k, mu):
    """Lifted basis of the block radical: elements of the arc-level-k span
    whose cosets span the radical of the (k, mu) block."""
    mu = tuple(mu)
    _require_char_zero(ctx, "block radical lifts")
    sm = block_structure_matrix(ctx, k, mu)
    h = sm.size
    phi = [list(row) for row in sm.entries]
    # Row reduce [phi | I]: rows come out as [R | A] with A invertible,
    # A phi = [R; 0] and R the reduced form of phi (rank r).  Column-clearing
    # R with B gives A phi B = E_r, so the matrices with vanishing top-left
    # r x r block pull back to the outer products B[:, s] x A[t, :].
    aug = [list(phi[i]) + [Fraction(int(i == j)) for j in range(h)] for i in range(h)]
    from .linalg import rref as _rref

    reduced, aug_pivots = _rref(aug)
    pivots = [p for p in aug_pivots if p < h]
    r = len(pivots)
    if len(reduced) != h:
        raise AssertionError("augmented elimination must have full row rank")
    rows_R = [row[:h] for row in reduced[:r]]
    A_rows = [row[h:] for row in reduced]
    free = [c for c in range(h) if c not in set(pivots)]
    B_cols = []
    for p in pivots:
        col = [Fraction(0)] * h
        col[p] = Fraction(1)
        B_cols.append(col)
    for c in free:
        col = [Fraction(0)] * h
        col[c] = Fraction(1)
        for i, p in enumerate(pivots):
            col[p] -= rows_R[i][c]
        B_cols.append(col)

    junctions = enumerate_junctions(ctx.f, k)
    mod = specht_module(mu)
    d = mod.dim
    nj = len(junctions)
    units = {}

    def unit_element(a, b):
        key = (a, b)
        if key not in units:
            units[key] = mod.matrix_unit(a, b)
        return units[key]

    def lift_matrix(C):
        total = BrauerElement.zero(ctx)
        for i in range(h):
            a, wi = divmod(i, nj)
            for j in range(h):
                c = C[i][j]
                if not c:
                    continue
                b, vj = divmod(j, nj)
                total = total + c * boxtimes(
                    ctx, unit_element(a, b), junctions[wi], junctions[vj]
                )
        return total

    basis = []
    for s in range(h):
        for t in range(h):
            if s < r and t < r:
                continue
            C = [
                [B_cols[s][i] * A_rows[t][j] for j in range(h)] for i in range(h)
            ]
            elem = lift_matrix(C)
            if not elem.is_zero():
                basis.append(elem)
    return basis


# ---------------------------------------------------------------------------
# semisimplicity criterion


@dataclass(frozen=True)
class SemisimplicityVerdict:
    semisimple: bool
    source: str  # "table" for the integer criterion, "stable" for generic x


def semisimplicity_criterion(f, x, char=0):
    """Known semisimplicity table for integer loop parameters.

    Positive n and even negative -2n: semisimple iff n >= f-1.  Zero:
    semisimple iff f in {1, 3, 5}.  Characteristic must be 0 or > f.
    Non-integer parameters return the generic (stable) answer True, which is
    reported but never asserted.  Odd negative integers are outside the table.
    """
    if char != 0 and char <= f:
        return SemisimplicityVerdict(False, "table")
    x = Fraction(x)
    if x.denominator != 1:
        return SemisimplicityVerdict(True, "stable")
    n = int(x)
    if n > 0:
        return SemisimplicityVerdict(n >= f - 1, "table")
    if n == 0:
        return SemisimplicityVerdict(f in (1, 3, 5), "table")
    if n % 2 == 0:
        return SemisimplicityVerdict((-n) // 2 >= f - 1, "table")
    raise ValueError("no semisimplicity table entry for odd negative parameters")


# ---------------------------------------------------------------------------
# ideal / quotient radical cross-checks (characteristic zero)


def ideal_radical_dim_via_trace(ctx, level):
    """Trace-form radical dimension of the non-unital ideal at the given arc
    level, computed on its unitalization."""
    _require_char_zero(ctx, "trace-form radicals")
    basis, idx, loops = composition_table(ctx.f)
    keep = [i for i, d in enumerate(basis) if d.arc_count >= level]
    pos = {g: i for i, g in enumerate(keep)}
    n = len(keep)
    x = Fraction(ctx.x)
    max_loops = int(loops.max()) if len(basis) else 0
    pows = [x**e for e in range(max_loops + 1)]
    tr_ideal = []
    for g in keep:
        total = Fraction(0)
        for hcol in keep:
            if idx[g, hcol] == hcol:
                total += pows[loops[g, hcol]]
        tr_ideal.append(total)
    # On the unitalization k1 + I, L_g(1) = g has no component along 1, so the
    # trace of L_g is the ideal trace; tr(L_1) is the full dimension n + 1.
    size = n + 1
    T = [[Fraction(0)] * size for _ in range(size)]
    T[0][0] = Fraction(size)
    for i, g in enumerate(keep):
        T[0][i + 1] = tr_ideal[i]
        T[i + 1][0] = tr_ideal[i]
    for i, g in enumerate(keep):
        for j, hrow in enumerate(keep):
            p = int(idx[g, hrow])
            T[i + 1][j + 1] = pows[loops[g, hrow]] * tr_ideal[pos[p]]
    scale = 1
    for row in T:
        for v in row:
            den = v.denominator
            scale = scale * den // _gcd(scale, den)
    int_rows = [[int(v * scale) for v in row] for row in T]
    return size - bareiss_rank(int_rows)


def quotient_radical_dim_via_trace(ctx, level):
    """Trace-form radical dimension of the quotient by the ideal at the given
    arc level (diagrams with fewer arcs, products truncated)."""
    _require_char_zero(ctx, "trace-form radicals")
    basis, idx, loops = composition_table(ctx.f)
    keep = [i for i, d in enumerate(basis) if d.arc_count < level]
    pos = {g: i for i, g in enumerate(keep)}
    x = Fraction(ctx.x)
    max_loops = int(loops.max()) if len(basis) else 0
    pows = [x**e for e in range(max_loops + 1)]
    n = len(keep)
    tr_q = []
    for g in keep:
        total = Fraction(0)
        for hcol in keep:
            if idx[g, hcol] == hcol:
                total += pows[loops[g, hcol]]
        tr_q.append(total)
    T = [[Fraction(0)] * n for _ in range(n)]
    for i, g in enumerate(keep):
        for j, hrow in enumerate(keep):
            p = int(idx[g, hrow])
            if p in pos:  # products falling into the ideal act as zero
                T[i][j] = pows[loops[g, hrow]] * tr_q[pos[p]]
    scale = 1
    for row in T:
        for v in row:
            den = v.denominator
            scale = scale * den // _gcd(scale, den)
    int_rows = [[int(v * scale) for v in row] for row in T]
    return n - bareiss_rank(int_rows)


# ---------------------------------------------------------------------------
# reporting


def context_report(ctx, include_radical=True):
    """Machine-readable block/radical report, schema brauer-report/1."""
    blocks = []
    for desc in block_descriptors(ctx.f):
        h, r, rad = block_radical_dim(ctx, desc.k, desc.mu)
        blocks.append(
            {
                "k": desc.k,
                "mu": list(desc.mu),
                "h": h,
                "rank": r,
                "rad_dim": rad,
                "simple_dim": r * r,
            }
        )
    report = {
        "schema": "brauer-report/1",
        "f": ctx.f,
        "x": str(ctx.x),
        "dim": ctx.dim,
        "blocks": blocks,
    }
    if include_radical:
        summary = radical_summary(ctx)
        report["rad_dim"] = summary.dim
        report["rad_dim_method"] = summary.method
    else:
        report["rad_dim"] = ctx.dim - sum(b["simple_dim"] for b in blocks)
        report["rad_dim_method"] = "blocks"
    return report
