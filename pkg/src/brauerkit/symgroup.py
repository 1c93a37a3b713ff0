"""Symmetric-group data: partitions, characters, idempotents, Specht modules.

Irreducible modules are realized as left ideals generated by Young
symmetrizers, with a row-reduced rational basis; representation matrices of
arbitrary group elements are read off the reduced coordinates.  Characters
come independently via the Murnaghan-Nakayama recursion on beta-sets, so the
two constructions cross-check each other.

Group-algebra products follow the left-to-right permutation composition of
``diagrams.Permutation``.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import permutations as _itertools_permutations
from math import factorial

from .diagrams import Permutation, all_permutations
from .linalg import UnsupportedFieldError, rref


def partitions(m):
    """All partitions of m as weakly decreasing tuples, lexicographically
    decreasing; partitions(0) == [()]."""

    def gen(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return list(gen(m, m)) if m else [()]


def dual_partition(lam):
    """Transpose of the Young diagram."""
    lam = tuple(lam)
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > i) for i in range(lam[0]))


def standard_tableau_count(mu):
    """Hook length formula."""
    mu = tuple(mu)
    m = sum(mu)
    dual = dual_partition(mu)
    denom = 1
    for i, row in enumerate(mu):
        for j in range(row):
            denom *= row - j + dual[j] - i - 1
    return factorial(m) // denom


def character(mu, cycle_type):
    """Character of the irreducible module labelled mu on the given class.

    Murnaghan-Nakayama recursion on beta-sets: removing a border strip of
    length t moves a beta number down by t, with sign the parity of the beta
    numbers jumped over.
    """
    mu = tuple(mu)
    cycle_type = tuple(sorted(cycle_type, reverse=True))
    if sum(mu) != sum(cycle_type):
        raise ValueError("partition and cycle type must have equal size")
    rows = len(mu)
    betas = tuple(sorted(mu[i] + (rows - 1 - i) for i in range(rows)))
    return _mn(betas, cycle_type)


@lru_cache(maxsize=None)
def _mn(betas, parts):
    if not parts:
        return 1
    t, rest = parts[0], parts[1:]
    bset = set(betas)
    total = 0
    for b in betas:
        nb = b - t
        if nb < 0 or nb in bset:
            continue
        crossed = sum(1 for c in betas if nb < c < b)
        new_betas = tuple(sorted((bset - {b}) | {nb}))
        total += (-1) ** crossed * _mn(new_betas, rest)
    return total


class GroupAlgebraElement:
    """Element of the rational group algebra of S_m (sparse, convolution product)."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m, coeffs=None):
        self.m = m
        clean = {}
        for perm, c in (coeffs or {}).items():
            if perm.degree != m:
                raise ValueError("support must lie in the stated symmetric group")
            c = Fraction(c)
            if c:
                clean[perm] = c
        self.coeffs = clean

    @staticmethod
    def unit(m):
        return GroupAlgebraElement(m, {Permutation.identity(m): 1})

    @staticmethod
    def of(perm):
        return GroupAlgebraElement(perm.degree, {perm: 1})

    def __add__(self, other):
        self._check(other)
        coeffs = dict(self.coeffs)
        for perm, c in other.coeffs.items():
            coeffs[perm] = coeffs.get(perm, Fraction(0)) + c
        return GroupAlgebraElement(self.m, coeffs)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        return GroupAlgebraElement(
            self.m, {perm: Fraction(scalar) * c for perm, c in self.coeffs.items()}
        )

    def __mul__(self, other):
        if isinstance(other, Permutation):
            other = GroupAlgebraElement.of(other)
        self._check(other)
        coeffs = {}
        for p, cp in self.coeffs.items():
            for q, cq in other.coeffs.items():
                r = p * q
                coeffs[r] = coeffs.get(r, Fraction(0)) + cp * cq
        return GroupAlgebraElement(self.m, coeffs)

    def _check(self, other):
        if self.m != other.m:
            raise ValueError("degree mismatch")

    def __eq__(self, other):
        return (
            isinstance(other, GroupAlgebraElement)
            and self.m == other.m
            and self.coeffs == other.coeffs
        )

    def is_zero(self):
        return not self.coeffs

    def __repr__(self):
        if not self.coeffs:
            return f"GroupAlgebraElement(S_{self.m}: 0)"
        terms = ", ".join(
            f"{c}*{list(p.images)}" for p, c in sorted(self.coeffs.items(), key=lambda t: t[0].images)
        )
        return f"GroupAlgebraElement(S_{self.m}: {terms})"


def central_idempotent(mu, char=0):
    """The central idempotent acting as identity on the mu-isotypic block."""
    mu = tuple(mu)
    m = sum(mu)
    if char != 0 and char <= m:
        raise UnsupportedFieldError(
            f"central idempotents need characteristic 0 or > {m}"
        )
    dim = standard_tableau_count(mu)
    scale = Fraction(dim, factorial(m))
    coeffs = {}
    for perm in all_permutations(m):
        chi = character(mu, perm.cycle_type())
        if chi:
            coeffs[perm] = scale * chi
    return GroupAlgebraElement(m, coeffs)


def symmetrizer(m, indices):
    """Sum of all permutations of the given index block, identity elsewhere."""
    return _block_sum(m, indices, signed=False)


def antisymmetrizer(m, indices):
    """Signed sum of all permutations of the given index block."""
    return _block_sum(m, indices, signed=True)


def _block_sum(m, indices, signed):
    indices = tuple(indices)
    if len(set(indices)) != len(indices):
        raise ValueError("block indices must be distinct")
    if any(not 1 <= i <= m for i in indices):
        raise ValueError(f"block indices must lie in 1..{m}")
    coeffs = {}
    for images in _itertools_permutations(indices):
        full = list(range(1, m + 1))
        for src, dst in zip(indices, images):
            full[src - 1] = dst
        perm = Permutation(full)
        coeffs[perm] = perm.sign() if signed else 1
    return GroupAlgebraElement(m, coeffs)


def alt_alt(m, p, q):
    """Antisymmetrizer over 1..p times antisymmetrizer over p+1..p+q."""
    if p + q > m:
        raise ValueError("blocks exceed the degree")
    return antisymmetrizer(m, range(1, p + 1)) * antisymmetrizer(
        m, range(p + 1, p + q + 1)
    )


def young_symmetrizer(mu):
    """Row symmetrizer times signed column symmetrizer of the canonical tableau."""
    mu = tuple(mu)
    m = sum(mu)
    rows = []
    nxt = 1
    for part in mu:
        rows.append(tuple(range(nxt, nxt + part)))
        nxt += part
    cols = []
    if mu:
        for j in range(mu[0]):
            cols.append(tuple(row[j] for row in rows if len(row) > j))

    def group_sum(blocks, signed):
        out = GroupAlgebraElement.unit(m)
        for block in blocks:
            if len(block) > 1:
                out = out * _block_sum(m, block, signed)
        return out

    return group_sum(rows, signed=False) * group_sum(cols, signed=True)


class SpechtModule:
    """Irreducible module for the partition mu, realized inside the group algebra.

    ``basis`` rows are reduced-echelon coordinates over the permutation list
    of S_m (lexicographic by images); ``matrix(g)`` is left multiplication by
    g on that basis, a homomorphism for the left-to-right product.
    """

    def __init__(self, mu):
        mu = tuple(mu)
        self.mu = mu
        self.m = sum(mu)
        perms = all_permutations(self.m)
        self._perms = perms
        self._index = {p: i for i, p in enumerate(perms)}
        y = young_symmetrizer(mu)
        span_rows = []
        for g in perms:
            gy = GroupAlgebraElement.of(g) * y
            row = [Fraction(0)] * len(perms)
            for perm, c in gy.coeffs.items():
                row[self._index[perm]] = c
            span_rows.append(row)
        self.basis, self.pivots = rref(span_rows)
        self.dim = len(self.basis)
        expected = standard_tableau_count(mu)
        if self.dim != expected:
            raise AssertionError(
                f"ideal dimension {self.dim} != tableau count {expected} for {mu}"
            )
        self._matrix_cache = {}

    def matrix(self, perm):
        """Left multiplication by perm on the reduced basis (dim x dim, rational)."""
        mat = self._matrix_cache.get(perm)
        if mat is not None:
            return mat
        n = len(self._perms)
        cols = []
        for row in self.basis:
            moved = [Fraction(0)] * n
            for idx, c in enumerate(row):
                if c:
                    moved[self._index[perm * self._perms[idx]]] = c
            cols.append([moved[p] for p in self.pivots])
        mat = tuple(
            tuple(cols[j][i] for j in range(self.dim)) for i in range(self.dim)
        )
        self._matrix_cache[perm] = mat
        return mat

    def generator_matrices(self):
        """Matrices of the adjacent transpositions s_1..s_{m-1}."""
        return [
            self.matrix(Permutation.transposition(self.m, i, i + 1))
            for i in range(1, self.m)
        ]

    def element_matrix(self, elem):
        """Matrix of a group algebra element (linear extension of matrix)."""
        n = self.dim
        out = [[Fraction(0)] * n for _ in range(n)]
        for perm, c in elem.coeffs.items():
            mat = self.matrix(perm)
            for i in range(n):
                row = mat[i]
                for j in range(n):
                    if row[j]:
                        out[i][j] += c * row[j]
        return [tuple(r) for r in out]

    def matrix_unit(self, a, b):
        """Group algebra element acting as the (a,b) matrix unit on this module
        and as zero on every other irreducible."""
        scale = Fraction(self.dim, factorial(self.m))
        coeffs = {}
        for g in self._perms:
            val = self.matrix(g.inverse())[b][a]
            if val:
                coeffs[g] = scale * val
        return GroupAlgebraElement(self.m, coeffs)


@lru_cache(maxsize=None)
def specht_module(mu):
    return SpechtModule(tuple(mu))


def conjugacy_classes(m):
    """(cycle_type, class size) pairs for S_m."""
    sizes = {}
    for perm in all_permutations(m):
        t = perm.cycle_type()
        sizes[t] = sizes.get(t, 0) + 1
    return sorted(sizes.items(), reverse=True)
