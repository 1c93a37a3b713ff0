"""The parameter-1 specialization on full-arc diagrams and pointed chord
diagrams.

For even f the diagrams with the maximal number of arcs form a monoid (loops
contribute a factor 1), acting on full-arc junctions by replacing them with
the diagram's top structure.  The trace functionals assigning 1 to every
basis diagram or junction cut out the radical at the deepest filtration
level; everything here works over any coefficient field.

Counting facts (how many full-arc diagrams, how many chords) are always
established by enumeration, never by formula.
"""

from math import cos, sin, pi as _pi

from .algebra import BrauerElement, context
from .cells import CellModule, CellVector
from .diagrams import (
    Diagram,
    Junction,
    compose_diagrams,
    enumerate_diagrams_with_arcs,
    enumerate_junctions,
)


def full_arc_diagrams(f):
    """All diagrams with f/2 arcs per row, by exhaustive enumeration."""
    if f % 2:
        raise ValueError("need even f")
    return enumerate_diagrams_with_arcs(f, f // 2)


def full_arc_junctions(f):
    if f % 2:
        raise ValueError("need even f")
    return enumerate_junctions(f, f // 2)


def monoid_product(d1, d2):
    """Product inside the full-arc monoid (the loop factor is 1)."""
    half = d1.f // 2
    if d1.f % 2:
        raise ValueError("need even f")
    if d1.arc_count != half or d2.arc_count != half:
        raise ValueError("both factors must have the maximal arc count")
    prod, _loops = compose_diagrams(d1, d2)
    if prod.arc_count != half:
        raise AssertionError("full-arc diagrams must be closed under products")
    return prod


def trace_element(element):
    """Sum of the coefficients: the functional taking value 1 on every diagram."""
    field = element.ctx.field
    total = field.zero
    for c in element.coeffs.values():
        total = field.add(total, c)
    return total


def trace_vector(vector):
    field = vector.module.ctx.field
    total = field.zero
    for c in vector.coords.values():
        total = field.add(total, c)
    return total


def tl_context(f, char=0):
    return context(f, 1, char)


def tl_radical_basis(f, char=0):
    """Basis of the trace kernel on the deepest filtration level: consecutive
    differences of the enumerated full-arc diagrams."""
    ctx = tl_context(f, char)
    diagrams = full_arc_diagrams(f)
    return [
        BrauerElement(ctx, {diagrams[i]: 1, diagrams[i + 1]: -1})
        for i in range(len(diagrams) - 1)
    ]


def tl_module(f, char=0):
    return CellModule(tl_context(f, char), f // 2, ())


def tl_module_radical(f, char=0):
    """Consecutive junction differences: the trace kernel of the module."""
    module = tl_module(f, char)
    n = len(module.junctions)
    return [
        CellVector(module, {i: 1, i + 1: -1}) for i in range(n - 1)
    ]


def cube_zero_check(f, samples=10000, seed=0, char=0):
    """Triple products of trace-kernel differences vanish.

    Exhaustive over the difference basis for f <= 4; uniform seeded sampling
    of difference triples above that.
    """
    if f % 2:
        raise ValueError("need even f")
    basis = tl_radical_basis(f, char)
    if not basis:
        return True
    if f <= 4:
        for a in basis:
            for b in basis:
                for c in basis:
                    if not ((a * b) * c).is_zero():
                        return False
        return True
    import random

    rng = random.Random(seed)
    ctx = basis[0].ctx
    diagrams = full_arc_diagrams(f)
    for _ in range(samples):
        picks = [rng.sample(range(len(diagrams)), 2) for _ in range(3)]
        elems = [
            BrauerElement(ctx, {diagrams[i]: 1, diagrams[j]: -1}) for i, j in picks
        ]
        if not ((elems[0] * elems[1]) * elems[2]).is_zero():
            return False
    return True


# ---------------------------------------------------------------------------
# pointed chord diagrams


class ChordDiagram:
    """Perfect matching of f points on a based circle, clockwise from the base."""

    __slots__ = ("f", "chords")

    def __init__(self, f, chords):
        chords = tuple(sorted(tuple(sorted(c)) for c in chords))
        seen = set()
        for u, v in chords:
            if not (1 <= u < v <= f):
                raise ValueError(f"bad chord ({u},{v})")
            if u in seen or v in seen:
                raise ValueError("chords must be disjoint")
            seen.update((u, v))
        if len(seen) != f:
            raise ValueError("chords must cover every point")
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "chords", chords)

    def __eq__(self, other):
        return (
            isinstance(other, ChordDiagram)
            and self.f == other.f
            and self.chords == other.chords
        )

    def __hash__(self):
        return hash(("chord", self.f, self.chords))

    def __repr__(self):
        return f"ChordDiagram(f={self.f}; {self.chords})"

    def to_json(self):
        return [list(c) for c in self.chords]


def chord_of_junction(j):
    """Wind the junction segment onto a based circle."""
    if 2 * j.k != j.f:
        raise ValueError("junction must have the maximal arc count")
    return ChordDiagram(j.f, j.arcs)


def junction_of_chord(c):
    """Cut the circle at the basepoint."""
    return Junction.from_arcs(c.f, c.chords)


def enumerate_chord_diagrams(f):
    return [chord_of_junction(j) for j in full_arc_junctions(f)]


def render_chord(c, radius=None):
    """ASCII picture: points on a circle (base marked '*'), chords as lines."""
    r = radius if radius is not None else max(5, c.f)
    size = 2 * r + 3
    canvas = [[" "] * size for _ in range(size)]
    centre = r + 1
    pos = {}
    for i in range(1, c.f + 1):
        angle = _pi / 2 - 2 * _pi * (i - 0.5) / c.f
        row = centre - round(r * sin(angle))
        col = centre + round(r * cos(angle))
        pos[i] = (row, col)
    base_row = centre - r
    canvas[max(0, base_row - 1)][centre] = "*"
    for u, v in c.chords:
        (r0, c0), (r1, c1) = pos[u], pos[v]
        steps = max(abs(r1 - r0), abs(c1 - c0), 1)
        for s in range(steps + 1):
            rr = round(r0 + (r1 - r0) * s / steps)
            cc = round(c0 + (c1 - c0) * s / steps)
            if canvas[rr][cc] == " ":
                canvas[rr][cc] = "."
    for i in range(1, c.f + 1):
        rr, cc = pos[i]
        canvas[rr][cc] = str(i % 10)
    return "\n".join("".join(row).rstrip() for row in canvas)
