"""Exact linear algebra over the rationals and prime fields.

Everything is deterministic: Gaussian elimination always picks the first
nonzero pivot, so ranks, echelon forms and nullspace bases are reproducible.
Dense routines work on lists of lists; the incremental SpanBuilder handles
sparse vectors keyed by basis index.  Integer ranks use fraction-free
Bareiss elimination; large integer matrices get a modular rank bound
(numpy, fixed 31-bit primes).
"""

from fractions import Fraction

import numpy as np


class UnsupportedFieldError(ValueError):
    """Raised when an operation requires characteristic zero (or a larger prime)."""


class RationalField:
    """Exact rationals via fractions.Fraction."""

    char = 0

    def coerce(self, a):
        return Fraction(a)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return Fraction(1) / a

    def neg(self, a):
        return -a

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField:
    """Integers modulo a prime, elements stored as ints in 0..p-1."""

    def __init__(self, p):
        if p < 2:
            raise ValueError("modulus must be a prime >= 2")
        self.p = p

    @property
    def char(self):
        return self.p

    def coerce(self, a):
        if isinstance(a, Fraction):
            den = a.denominator % self.p
            if den == 0:
                raise UnsupportedFieldError(f"denominator divisible by {self.p}")
            return a.numerator * pow(den, -1, self.p) % self.p
        return int(a) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def neg(self, a):
        return (-a) % self.p

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()


def rref(rows, field=QQ):
    """Reduced row echelon form. Returns (new rows, pivot column list)."""
    rows = [list(map(field.coerce, row)) for row in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = next(
            (i for i in range(r, len(rows)) if rows[i][c] != field.zero), None
        )
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [field.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != field.zero:
                factor = rows[i][c]
                rows[i] = [
                    field.sub(x, field.mul(factor, y))
                    for x, y in zip(rows[i], rows[r])
                ]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(rows, field=QQ):
    return len(rref(rows, field)[1])


def nullspace(rows, ncols=None, field=QQ):
    """Basis of the right nullspace of the row matrix, one vector per free column."""
    if ncols is None:
        if not rows:
            raise ValueError("empty matrix needs an explicit column count")
        ncols = len(rows[0])
    reduced, pivots = rref(rows, field)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [field.zero] * ncols
        vec[free] = field.one
        for r, c in enumerate(pivots):
            vec[c] = field.neg(reduced[r][free])
        basis.append(vec)
    return basis


def bareiss_rank(rows):
    """Rank of an integer matrix by fraction-free elimination, first-nonzero pivots."""
    m = [list(map(int, row)) for row in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    prev = 1
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if m[i][c]), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pivot = m[r][c]
        row_r = m[r]
        for i in range(r + 1, nrows):
            row_i = m[i]
            head = row_i[c]
            # every row below is rescaled; the division is exact (Sylvester)
            for j in range(c, ncols):
                row_i[j] = (pivot * row_i[j] - head * row_r[j]) // prev
        prev = pivot
        r += 1
        if r == nrows:
            break
    return r


MODULAR_PRIMES = (2147483629, 2147483587)


def modular_rank(matrix, primes=MODULAR_PRIMES):
    """max_p rank(matrix mod p) for the fixed prime list.

    Always a lower bound on the rational rank; equality certified when the
    result equals min(nrows, ncols).
    """
    a = np.asarray(matrix, dtype=np.int64)
    best = 0
    for p in primes:
        best = max(best, _rank_mod_p(a, p))
        if best == min(a.shape):
            break
    return best


def _rank_mod_p(a, p):
    m = np.mod(a, p).astype(np.int64)
    nrows, ncols = m.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        pivot_row = r + int(nz[0])
        if pivot_row != r:
            m[[r, pivot_row]] = m[[pivot_row, r]]
        inv = pow(int(m[r, c]), -1, p)
        m[r] = (m[r] * inv) % p
        col = m[r + 1 :, c]
        mask = col != 0
        if mask.any():
            m[r + 1 :][mask] = (m[r + 1 :][mask] - np.outer(col[mask], m[r])) % p
        r += 1
    return r


class SpanBuilder:
    """Incremental fully-reduced echelon span of sparse vectors (dict index -> scalar).

    ``key`` orders the coordinates (default: natural order); pivots are
    minimal under it.  insert() keeps every stored row free of the other
    rows' pivots, so membership is a single reduction and rows whose pivot
    lies in a key-maximal coordinate block are supported entirely there.
    """

    def __init__(self, field=QQ, key=None):
        self.field = field
        self.key = key if key is not None else lambda i: i
        self.rows = {}  # pivot index -> dict vector, pivot coefficient 1

    def _clean(self, vec):
        f = self.field
        return {i: x for i, x in ((i, f.coerce(x)) for i, x in vec.items()) if x != f.zero}

    def reduce(self, vec):
        """Residual of vec modulo the current span (no stored pivot survives)."""
        f = self.field
        vec = self._clean(vec)
        while True:
            target = None
            for i in sorted(vec, key=self.key):
                if i in self.rows:
                    target = i
                    break
            if target is None:
                return vec
            row = self.rows[target]
            factor = vec[target]
            for i, x in row.items():
                val = f.sub(vec.get(i, f.zero), f.mul(factor, x))
                if val == f.zero:
                    vec.pop(i, None)
                else:
                    vec[i] = val

    def insert(self, vec):
        """Add vec to the span; True if it enlarged the span."""
        f = self.field
        residual = self.reduce(vec)
        if not residual:
            return False
        pivot = min(residual, key=self.key)
        inv = f.inv(residual[pivot])
        residual = {i: f.mul(inv, x) for i, x in residual.items()}
        # keep reduced form: eliminate the new pivot from stored rows
        for p, row in self.rows.items():
            coeff = row.get(pivot)
            if coeff is not None:
                for i, x in residual.items():
                    val = f.sub(row.get(i, f.zero), f.mul(coeff, x))
                    if val == f.zero:
                        row.pop(i, None)
                    else:
                        row[i] = val
        self.rows[pivot] = residual
        return True

    def contains(self, vec):
        return not self.reduce(vec)

    def contains_all(self, vecs):
        return all(self.contains(v) for v in vecs)

    @property
    def dim(self):
        return len(self.rows)

    def basis(self):
        """Reduced basis rows, ordered by pivot key."""
        return [dict(self.rows[p]) for p in sorted(self.rows, key=self.key)]


def span_dim(vectors, field=QQ):
    builder = SpanBuilder(field)
    for v in vectors:
        builder.insert(v)
    return builder.dim


def spans_equal(vectors_a, vectors_b, field=QQ):
    """Two-way containment of the spans of two families of sparse vectors."""
    sa, sb = SpanBuilder(field), SpanBuilder(field)
    for v in vectors_a:
        sa.insert(v)
    for v in vectors_b:
        sb.insert(v)
    if sa.dim != sb.dim:
        return False
    return sa.contains_all(sb.basis()) and sb.contains_all(sa.basis())


def column_relations(columns, field=QQ):
    """Nullspace of the matrix whose columns are the given sparse vectors.

    Feeds columns left to right into an echelon structure while tracking the
    expression of each column in terms of the earlier ones; every dependent
    column yields one relation vector (length = number of columns).
    """
    builder_rows = {}  # pivot coordinate -> (vector, expression)
    relations = []
    f = field
    for j, col in enumerate(columns):
        vec = {i: f.coerce(x) for i, x in col.items() if f.coerce(x) != f.zero}
        expr = {j: f.one}
        while vec:
            pivot = min(vec)
            stored = builder_rows.get(pivot)
            if stored is None:
                break
            row, row_expr = stored
            factor = vec[pivot]
            for i, x in row.items():
                val = f.sub(vec.get(i, f.zero), f.mul(factor, x))
                if val == f.zero:
                    vec.pop(i, None)
                else:
                    vec[i] = val
            for i, x in row_expr.items():
                val = f.sub(expr.get(i, f.zero), f.mul(factor, x))
                if val == f.zero:
                    expr.pop(i, None)
                else:
                    expr[i] = val
        if not vec:
            relations.append(expr)
        else:
            pivot = min(vec)
            inv = f.inv(vec[pivot])
            vec = {i: f.mul(inv, x) for i, x in vec.items()}
            expr = {i: f.mul(inv, x) for i, x in expr.items()}
            builder_rows[pivot] = (vec, expr)
    return relations


def intersect_with_coordinate_subspace(vectors, inside, field=QQ):
    """Basis of span(vectors) ∩ {v : support(v) ⊆ inside}.

    Complement coordinates take pivot priority; in fully reduced form the
    rows whose pivot lies inside are supported entirely inside and span the
    intersection.
    """
    inside = set(inside)
    builder = SpanBuilder(field, key=lambda i: (1 if i in inside else 0, i))
    for vec in vectors:
        builder.insert(vec)
    return [row for row in builder.basis() if set(row) <= inside]
