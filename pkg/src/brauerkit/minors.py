"""Diagrammatic minors and Pfaffians.

A minor of order r is the alternating sum over bijections between two
disjoint r-sets of moving vertices (rows and columns), all other vertices
matched by a fixed partial pairing; a Pfaffian of order 2r sums over all
pairings of 2r moving vertices with the matching sign twisted by diagram
signs, which collapses to a single overall sign.

The deep part of the arc filtration spanned by these elements is the
certified inner approximation of the trace-form radical; multiplication by
a basis diagram maps the family to itself up to powers of the loop
parameter, with an explicit zero law when a same-row arc meets two moving
vertices.
"""

from dataclasses import dataclass
from itertools import combinations

from .algebra import BrauerElement, diagram_basis
from .diagrams import (
    Diagram,
    Permutation,
    all_permutations,
    perfect_matchings,
    s2f_act,
    sign,
)
from .linalg import SpanBuilder


def _check_partition_of_labels(f, moving, fixed):
    labels = set(range(1, 2 * f + 1))
    seen = list(moving)
    for u, v in fixed:
        seen.append(u)
        seen.append(v)
    if sorted(seen) != sorted(labels):
        raise ValueError("moving vertices and fixed edges must partition the labels")


@dataclass(frozen=True)
class MinorSpec:
    """Order-r minor data: row set, column set, and the fixed pairing."""

    f: int
    rows: tuple
    cols: tuple
    fixed: tuple

    def __post_init__(self):
        rows = tuple(self.rows)
        cols = tuple(self.cols)
        fixed = tuple(tuple(sorted(e)) for e in self.fixed)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "fixed", tuple(sorted(fixed)))
        if not rows or len(rows) != len(cols):
            raise ValueError("row and column sets must be nonempty of equal size")
        if set(rows) & set(cols):
            raise ValueError("row and column sets must be disjoint")
        _check_partition_of_labels(self.f, rows + cols, self.fixed)

    @property
    def order(self):
        return len(self.rows)

    @property
    def moving(self):
        return tuple(sorted(self.rows + self.cols))


@dataclass(frozen=True)
class PfaffianSpec:
    """Order-2r Pfaffian data: 2r moving vertices and the fixed pairing."""

    f: int
    moving: tuple
    fixed: tuple

    def __post_init__(self):
        moving = tuple(sorted(self.moving))
        fixed = tuple(sorted(tuple(sorted(e)) for e in self.fixed))
        object.__setattr__(self, "moving", moving)
        object.__setattr__(self, "fixed", fixed)
        if not moving or len(moving) % 2:
            raise ValueError("need a nonempty even moving set")
        _check_partition_of_labels(self.f, moving, fixed)

    @property
    def order(self):
        return len(self.moving)


def phi_V(f, pairing):
    """Monomial-to-diagram bijection on perfect pairings of the 2f labels."""
    return Diagram.from_edges(f, pairing)


def phi_W(f, pairing):
    """Sign-twisted bijection: (diagram sign, diagram)."""
    d = Diagram.from_edges(f, pairing)
    return sign(d), d


def build_minor(ctx, spec):
    """Alternating sum over bijections rows -> cols, fixed part constant."""
    if spec.f != ctx.f:
        raise ValueError("spec size does not match the context")
    r = spec.order
    coeffs = {}
    for perm in all_permutations(r):
        edges = list(spec.fixed)
        for t in range(1, r + 1):
            edges.append((spec.rows[t - 1], spec.cols[perm(t) - 1]))
        coeffs[phi_V(ctx.f, edges)] = perm.sign()
    return BrauerElement(ctx, coeffs)


def build_pfaffian(ctx, spec):
    """Pairing sum over the moving set with matching signs twisted by diagram
    signs; the result carries a single overall sign, which is asserted."""
    if spec.f != ctx.f:
        raise ValueError("spec size does not match the context")
    position = {label: i for i, label in enumerate(spec.moving)}
    coeffs = {}
    sgn_seen = set()
    for matching in perfect_matchings(spec.moving):
        pairs = sorted(tuple(sorted(p)) for p in matching)
        flat = [v for pair in pairs for v in pair]
        perm = Permutation(position[v] + 1 for v in flat)
        edges = list(spec.fixed) + pairs
        eps, d = phi_W(ctx.f, edges)
        c = perm.sign() * eps
        sgn_seen.add(c)
        coeffs[d] = c
    if len(sgn_seen) != 1:
        raise AssertionError("pairing sum must carry a single overall sign")
    return BrauerElement(ctx, coeffs)


# ---------------------------------------------------------------------------
# enumeration


def _row_split(f, label):
    """(tops, bottoms) membership helper."""
    return label <= f


def minor_spec_min_arcs(spec):
    """Smallest arc count over the constituent diagrams."""
    f = spec.f
    fixed_top = sum(1 for u, v in spec.fixed if u <= f and v <= f)
    t_rows = sum(1 for u in spec.rows if u <= f)
    b_cols = sum(1 for u in spec.cols if u > f)
    return fixed_top + max(0, t_rows - b_cols)


def pfaffian_spec_min_arcs(spec):
    f = spec.f
    fixed_top = sum(1 for u, v in spec.fixed if u <= f and v <= f)
    t = sum(1 for u in spec.moving if u <= f)
    b = len(spec.moving) - t
    return fixed_top + max(0, (t - b) // 2)


def enumerate_minor_specs(f, r, min_arcs=0):
    """All order-r minor specs, one per unordered {rows, cols} pair (the
    smallest moving label is a row), optionally restricted to specs whose
    every constituent diagram has at least min_arcs arcs."""
    labels = tuple(range(1, 2 * f + 1))
    for moving in combinations(labels, 2 * r):
        rest = [v for v in labels if v not in set(moving)]
        others = moving[1:]
        for row_rest in combinations(others, r - 1):
            rows = (moving[0],) + row_rest
            cols = tuple(v for v in others if v not in set(row_rest))
            for fixed in perfect_matchings(rest):
                spec = MinorSpec(f, rows, cols, fixed)
                if minor_spec_min_arcs(spec) >= min_arcs:
                    yield spec


def enumerate_pfaffian_specs(f, r, min_arcs=0):
    """All order-2r Pfaffian specs, optionally restricted as above."""
    labels = tuple(range(1, 2 * f + 1))
    for moving in combinations(labels, 2 * r):
        rest = [v for v in labels if v not in set(moving)]
        for fixed in perfect_matchings(rest):
            spec = PfaffianSpec(f, moving, fixed)
            if pfaffian_spec_min_arcs(spec) >= min_arcs:
                yield spec


def enumerate_minors(ctx, r, min_arcs=0):
    """(spec, element) stream; deterministic order."""
    for spec in enumerate_minor_specs(ctx.f, r, min_arcs):
        yield spec, build_minor(ctx, spec)


def enumerate_pfaffians(ctx, r, min_arcs=0):
    for spec in enumerate_pfaffian_specs(ctx.f, r, min_arcs):
        yield spec, build_pfaffian(ctx, spec)


# ---------------------------------------------------------------------------
# multiplication by a basis diagram (structural form of the product laws)


def _flip_label(f, u):
    return u + f if u <= f else u - f


def flip_diagram(d):
    """Swap top and bottom rows."""
    return Diagram.from_edges(
        d.f, [(_flip_label(d.f, u), _flip_label(d.f, v)) for u, v in d.edges]
    )


def _flip_spec(spec):
    if isinstance(spec, MinorSpec):
        return MinorSpec(
            spec.f,
            tuple(_flip_label(spec.f, u) for u in spec.rows),
            tuple(_flip_label(spec.f, u) for u in spec.cols),
            tuple(
                (_flip_label(spec.f, u), _flip_label(spec.f, v))
                for u, v in spec.fixed
            ),
        )
    return PfaffianSpec(
        spec.f,
        tuple(_flip_label(spec.f, u) for u in spec.moving),
        tuple(
            (_flip_label(spec.f, u), _flip_label(spec.f, v)) for u, v in spec.fixed
        ),
    )


def multiply_diagram_spec(d, spec, side="left"):
    """Product of a basis diagram with a minor or Pfaffian, in structural form.

    Returns None when the product is zero (a same-row arc of d meets two
    moving vertices, possibly through fixed arcs), else (e, new_spec) with
    the product equal to +-x^e times the element built from new_spec.
    """
    if side == "right":
        res = multiply_diagram_spec(flip_diagram(d), _flip_spec(spec), "left")
        if res is None:
            return None
        e, new_spec = res
        return e, _flip_spec(new_spec)
    if side != "left":
        raise ValueError("side must be 'left' or 'right'")
    f = spec.f
    if d.f != f:
        raise ValueError("size mismatch")

    if isinstance(spec, MinorSpec):
        klass = {}
        for u in spec.rows:
            klass[u] = "R"
        for u in spec.cols:
            klass[u] = "C"
    else:
        klass = {u: "M" for u in spec.moving}
    fixed_partner = {}
    for u, v in spec.fixed:
        fixed_partner[u] = v
        fixed_partner[v] = u

    pd = d.partner  # 0-based

    def d_arc_partner(i):  # interface position 1..f -> arc partner or None
        j = pd[f + i - 1]
        return j - f + 1 if j >= f else None

    def d_top_end(i):  # vertical: top label
        j = pd[f + i - 1]
        return j + 1 if j < f else None

    def x_arc_partner(i):  # fixed top arc partner of X, or None
        w = fixed_partner.get(i)
        return w if w is not None and w <= f else None

    def x_terminal(i):
        if i in klass:
            return ("moving", i)
        w = fixed_partner.get(i)
        if w is not None and w > f:
            return ("bottom", w)
        return None

    new_fixed = [e for e in spec.fixed if e[0] > f and e[1] > f]
    for i in range(1, f + 1):
        j = pd[i - 1]
        if j < f and j + 1 > i:
            new_fixed.append((i, j + 1))  # top arc of d

    relabel = {}  # moving top label of X -> new label
    visited = set()

    def walk(start, first_side):
        """Follow the chain from a terminal at `start`, leaving via first_side."""
        node, side_ = start, first_side
        while True:
            visited.add(node)
            if side_ == "d":
                top = d_top_end(node)
                if top is not None:
                    return ("top", top)
                node = d_arc_partner(node)
                side_ = "x"
            else:
                term = x_terminal(node)
                if term is not None:
                    visited.add(node)
                    return term
                node = x_arc_partner(node)
                side_ = "d"

    def combine(t1, t2):
        kinds = {t1[0], t2[0]}
        if kinds == {"moving"}:
            return False
        if "moving" in kinds:
            mov = t1 if t1[0] == "moving" else t2
            other = t2 if t1[0] == "moving" else t1
            relabel[mov[1]] = other[1]
        else:
            new_fixed.append(tuple(sorted((t1[1], t2[1]))))
        return True

    # paths starting at x-side terminals
    for i in range(1, f + 1):
        if i in visited:
            continue
        term = x_terminal(i)
        if term is None:
            continue
        visited.add(i)
        other_end = walk(i, "d")
        if not combine(term, other_end):
            return None
    # paths starting at d-side terminals (top verticals) not yet seen
    for i in range(1, f + 1):
        if i in visited:
            continue
        top = d_top_end(i)
        if top is None:
            continue
        visited.add(i)
        other_end = walk(i, "x")
        if not combine(("top", top), other_end):
            return None

    # remaining interface nodes sit on closed cycles: each contributes x
    loops = 0
    for i in range(1, f + 1):
        if i in visited:
            continue
        loops += 1
        node, side_ = i, "d"
        while True:
            visited.add(node)
            node = d_arc_partner(node) if side_ == "d" else x_arc_partner(node)
            side_ = "x" if side_ == "d" else "d"
            if node == i and side_ == "d":
                break

    def map_label(u):
        if u > f:
            return u
        return relabel[u]

    if isinstance(spec, MinorSpec):
        new_spec = MinorSpec(
            f,
            tuple(sorted(map_label(u) for u in spec.rows)),
            tuple(sorted(map_label(u) for u in spec.cols)),
            tuple(new_fixed),
        )
    else:
        new_spec = PfaffianSpec(
            f, tuple(sorted(map_label(u) for u in spec.moving)), tuple(new_fixed)
        )
    return loops, new_spec


# ---------------------------------------------------------------------------
# deep-filtration spans


def deep_filtration_level(f, x):
    """Arc level below which the deep elements live for integer parameters."""
    x = int(x)
    if x > 0:
        return (f - x + 1) // 2
    if x == 0:
        return (f + 1) // 2
    n = -x // 2
    return (f - n + 1) // 2


def r_space_generators(ctx):
    """Generating family of the deep span, streamed lazily: minors of order
    x+1 for positive integer parameter, deep diagrams at zero, Pfaffians of
    order 2(n+1) at -2n; all constrained to the deep filtration level."""
    from fractions import Fraction

    x = Fraction(ctx.x)
    if ctx.char != 0 or x.denominator != 1:
        raise ValueError("deep spans are defined for integer parameters")
    n = int(x)
    if n < 0 and n % 2:
        raise ValueError("no deep span is defined for odd negative parameters")
    level = deep_filtration_level(ctx.f, n)

    def stream():
        if n > 0:
            for _, elem in enumerate_minors(ctx, n + 1, min_arcs=level):
                yield elem
        elif n == 0:
            for d in diagram_basis(ctx.f):
                if d.arc_count >= level:
                    yield BrauerElement.of(ctx, d)
        else:
            half = -n // 2
            for _, elem in enumerate_pfaffians(ctx, half + 1, min_arcs=level):
                yield elem

    return stream()


def r_space_basis(ctx):
    """Reduced basis of the deep span."""
    builder = SpanBuilder(ctx.field)
    for elem in r_space_generators(ctx):
        builder.insert(elem.to_index_vector())
    from .algebra import element_from_index_vector

    return [element_from_index_vector(ctx, row) for row in builder.basis()]


def minor_span_basis(ctx, order):
    """Reduced basis of the span of all minors of the given order."""
    builder = SpanBuilder(ctx.field)
    for _, elem in enumerate_minors(ctx, order):
        builder.insert(elem.to_index_vector())
    from .algebra import element_from_index_vector

    return [element_from_index_vector(ctx, row) for row in builder.basis()]


def pfaffian_span_basis(ctx, half_order):
    builder = SpanBuilder(ctx.field)
    for _, elem in enumerate_pfaffians(ctx, half_order):
        builder.insert(elem.to_index_vector())
    from .algebra import element_from_index_vector

    return [element_from_index_vector(ctx, row) for row in builder.basis()]


def insert_arcs_element(new_ctx, element, top_pair, bottom_pair):
    """Linear extension of arc insertion, landing two sizes up."""
    from .diagrams import insert_arcs

    if new_ctx.f != element.ctx.f + 2:
        raise ValueError("target context must be two strands larger")
    coeffs = {}
    for d, c in element.coeffs.items():
        coeffs[insert_arcs(d, top_pair, bottom_pair)] = c
    return BrauerElement(new_ctx, coeffs)


def inherited_radical_elements(new_ctx):
    """Images of the smaller deep span under every arc insertion."""
    from .algebra import context as _context

    small = _context(new_ctx.f - 2, new_ctx.x, new_ctx.char)
    out = []
    f = new_ctx.f
    pairs = [(i, j) for i in range(1, f + 1) for j in range(i + 1, f + 1)]
    for elem in r_space_basis(small):
        for tp in pairs:
            for bp in pairs:
                out.append(insert_arcs_element(new_ctx, elem, tp, bp))
    return out


def relabel_element(pi, element, signed=False):
    """Vertex relabelling extended linearly.

    With signed=True the relabelling is conjugated through the sign-twisted
    pairing bijection of the antisymmetric-variable picture: each edge whose
    canonical order is reversed contributes -1, and the diagram signs of the
    source and the image are folded in.
    """
    coeffs = {}
    field = element.ctx.field
    for d, c in element.coeffs.items():
        nd = s2f_act(pi, d)
        if signed:
            flips = sum(1 for u, v in d.edges if pi(u) > pi(v))
            twist = sign(d) * sign(nd) * (-1) ** flips
            c = field.mul(c, field.coerce(twist))
        coeffs[nd] = field.add(coeffs.get(nd, field.zero), c)
    return BrauerElement(element.ctx, coeffs)


# ---------------------------------------------------------------------------
# text encoding


def spec_to_text(spec):
    if isinstance(spec, MinorSpec):
        head = f"minor f={spec.f} r={spec.order}"
        body = (
            f" I={','.join(map(str, spec.rows))}"
            f" J={','.join(map(str, spec.cols))}"
        )
    else:
        head = f"pfaffian f={spec.f} r={spec.order // 2}"
        body = f" moving={','.join(map(str, spec.moving))}"
    fixed = ",".join(f"{u}-{v}" for u, v in spec.fixed)
    return f"{head}{body} fixed={fixed}"


def parse_spec(text):
    tokens = text.split()
    if not tokens or tokens[0] not in ("minor", "pfaffian"):
        raise ValueError("spec must start with 'minor' or 'pfaffian'")
    fields = {}
    for tok in tokens[1:]:
        if "=" not in tok:
            raise ValueError(f"malformed field {tok!r}")
        key, val = tok.split("=", 1)
        fields[key] = val
    f = int(fields["f"])
    fixed = []
    if fields.get("fixed"):
        for chunk in fields["fixed"].split(","):
            u, v = chunk.split("-")
            fixed.append((int(u), int(v)))
    if tokens[0] == "minor":
        rows = tuple(int(v) for v in fields["I"].split(","))
        cols = tuple(int(v) for v in fields["J"].split(","))
        spec = MinorSpec(f, rows, cols, tuple(fixed))
        if spec.order != int(fields["r"]):
            raise ValueError("declared order does not match the row count")
        return spec
    moving = tuple(int(v) for v in fields["moving"].split(","))
    spec = PfaffianSpec(f, moving, tuple(fixed))
    if spec.order != 2 * int(fields["r"]):
        raise ValueError("declared order does not match the moving count")
    return spec
