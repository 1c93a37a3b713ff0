"""Standard modules: an irreducible symmetric-group module tensored with the
span of k-arc junctions, carrying the diagram action through junctions.

A diagram acts on a basis vector (module coordinate, junction) by acting on
the junction; inadmissible junctions kill the vector, otherwise the strand
permutation acts on the module coordinate and the loop count contributes a
power of the loop parameter.  The Gram data of a module is the same
structure-constant matrix as the matching algebra block, and the module
radical is computed both as radical-times-module and as the Gram nullspace.
"""

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    block_structure_matrix,
    radical_basis,
    structure_matrix_rank,
)
from .diagrams import act_on_junction, enumerate_junctions
from .linalg import SpanBuilder, UnsupportedFieldError, nullspace
from .symgroup import specht_module


class CellModule:
    """The module at arc level k with strand-partition mu."""

    def __init__(self, ctx, k, mu):
        mu = tuple(mu)
        if sum(mu) != ctx.f - 2 * k:
            raise ValueError(f"partition {mu} must have size f-2k = {ctx.f - 2 * k}")
        self.ctx = ctx
        self.k = k
        self.mu = mu
        self.junctions = enumerate_junctions(ctx.f, k)
        self.specht = specht_module(mu)
        self.dim = self.specht.dim * len(self.junctions)
        self._junction_index = {v: i for i, v in enumerate(self.junctions)}

    def index(self, coord, junction_idx):
        """Basis position of (module coordinate, junction), coordinate-major."""
        return coord * len(self.junctions) + junction_idx

    def basis_vector(self, coord, junction_idx):
        return CellVector(self, {self.index(coord, junction_idx): 1})

    def basis(self):
        return [
            self.basis_vector(a, v)
            for a in range(self.specht.dim)
            for v in range(len(self.junctions))
        ]

    def __eq__(self, other):
        return (
            isinstance(other, CellModule)
            and self.ctx == other.ctx
            and self.k == other.k
            and self.mu == other.mu
        )

    def __hash__(self):
        return hash((self.ctx, self.k, self.mu))

    def __repr__(self):
        return f"CellModule(f={self.ctx.f}, x={self.ctx.x}, k={self.k}, mu={self.mu})"


class CellVector:
    """Sparse coordinates over the (module coordinate, junction) basis."""

    __slots__ = ("module", "coords")

    def __init__(self, module, coords=None):
        field = module.ctx.field
        clean = {}
        for i, c in (coords or {}).items():
            if not 0 <= i < module.dim:
                raise ValueError("coordinate index out of range")
            c = field.coerce(c)
            if c != field.zero:
                clean[i] = c
        object.__setattr__(self, "module", module)
        object.__setattr__(self, "coords", clean)

    def __add__(self, other):
        self._check(other)
        field = self.module.ctx.field
        coords = dict(self.coords)
        for i, c in other.coords.items():
            coords[i] = field.add(coords.get(i, field.zero), c)
        return CellVector(self.module, coords)

    def __sub__(self, other):
        self._check(other)
        field = self.module.ctx.field
        coords = dict(self.coords)
        for i, c in other.coords.items():
            coords[i] = field.sub(coords.get(i, field.zero), c)
        return CellVector(self.module, coords)

    def __rmul__(self, scalar):
        field = self.module.ctx.field
        scalar = field.coerce(scalar)
        return CellVector(
            self.module, {i: field.mul(scalar, c) for i, c in self.coords.items()}
        )

    def _check(self, other):
        if self.module != other.module:
            raise ValueError("module mismatch")

    def is_zero(self):
        return not self.coords

    def __eq__(self, other):
        return (
            isinstance(other, CellVector)
            and self.module == other.module
            and self.coords == other.coords
        )

    def __repr__(self):
        return f"CellVector({self.coords})"


def act(element, vector):
    """Left action of an algebra element on a module vector."""
    module = vector.module
    ctx = module.ctx
    if element.ctx != ctx:
        raise ValueError("context mismatch")
    field = ctx.field
    nj = len(module.junctions)
    out = {}
    for d, cd in element.coeffs.items():
        moved = {}  # junction index -> (new junction index, scale, rho matrix)
        for i, c in vector.coords.items():
            a, vi = divmod(i, nj)
            key = vi
            if key not in moved:
                res = act_on_junction(d, module.junctions[key])
                if res is None:
                    moved[key] = None
                else:
                    new_j, loops, pi = res
                    moved[key] = (
                        module._junction_index[new_j],
                        ctx.x_power(loops),
                        module.specht.matrix(pi),
                    )
            data = moved[key]
            if data is None:
                continue
            nj_idx, scale, rho = data
            base = field.mul(cd, field.mul(scale, c))
            for b in range(module.specht.dim):
                val = rho[b][a]
                if not val:
                    continue
                tgt = module.index(b, nj_idx)
                out[tgt] = field.add(
                    out.get(tgt, field.zero), field.mul(base, field.coerce(val))
                )
    return CellVector(module, out)


def gram_matrix(module):
    """Structure-constant matrix of the matching block: the module's Gram data."""
    sm = block_structure_matrix(module.ctx, module.k, module.mu)
    return sm.entries


def gram_rank(module):
    sm = block_structure_matrix(module.ctx, module.k, module.mu)
    return structure_matrix_rank(sm)


def gram_nullspace_vectors(module):
    rows = [list(r) for r in gram_matrix(module)]
    vecs = nullspace(rows, ncols=module.dim)
    return [
        CellVector(module, {i: c for i, c in enumerate(v) if c}) for v in vecs
    ]


def is_exceptional_zero_block(module):
    """The one module with no simple quotient: even f, k = f/2, parameter 0."""
    ctx = module.ctx
    return (
        ctx.f % 2 == 0
        and module.k == ctx.f // 2
        and ctx.field.coerce(ctx.x) == ctx.field.zero
    )


def module_radical_basis(module):
    """Radical of the module: radical-of-the-algebra times the module.

    In the exceptional zero-parameter top-level case the module has no
    simple quotient and the radical is the whole module.
    """
    ctx = module.ctx
    if ctx.char != 0:
        raise UnsupportedFieldError("module radicals require characteristic 0")
    if is_exceptional_zero_block(module):
        return module.basis()
    rad = radical_basis(ctx)
    builder = SpanBuilder(ctx.field)
    out = []
    for r in rad:
        for w in module.basis():
            vec = act(r, w)
            if not vec.is_zero() and builder.insert(vec.coords):
                out.append(vec)
    return out


def check_R_action(module, deep_basis):
    """Span of deep-filtration elements acting on the module, compared with
    the module radical: (span dim, contained, equals)."""
    builder = SpanBuilder(module.ctx.field)
    vectors = []
    for r in deep_basis:
        for w in module.basis():
            vec = act(r, w)
            if not vec.is_zero() and builder.insert(vec.coords):
                vectors.append(vec)
    rad = module_radical_basis(module)
    rad_builder = SpanBuilder(module.ctx.field)
    for v in rad:
        rad_builder.insert(v.coords)
    contained = all(rad_builder.contains(v.coords) for v in vectors)
    equals = contained and builder.dim == rad_builder.dim
    return builder.dim, contained, equals


def module_report(module):
    """Machine-readable per-module summary.

    ``deep_action_equals_radical`` reports whether the deep filtration span
    acting on the module fills the whole module radical ("holds"/"fails"),
    or "n/a" outside the deep range or for unsupported parameters.
    """
    ctx = module.ctx
    g_rank = gram_rank(module)
    rad = module_radical_basis(module)
    report = {
        "f": ctx.f,
        "x": str(ctx.x),
        "k": module.k,
        "mu": list(module.mu),
        "dim": module.dim,
        "gram_rank": g_rank,
        "rad_dim": len(rad),
    }
    verdict = "n/a"
    if ctx.char == 0:
        from .minors import deep_filtration_level, r_space_basis

        x = Fraction(ctx.x)
        if x.denominator == 1 and (int(x) >= 0 or int(x) % 2 == 0):
            if module.k >= deep_filtration_level(ctx.f, int(x)):
                _, _, equals = check_R_action(module, r_space_basis(ctx))
                verdict = "holds" if equals else "fails"
    report["deep_action_equals_radical"] = verdict
    return report
