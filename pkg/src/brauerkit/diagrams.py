"""Combinatorics of two-row pairing diagrams and one-row junctions.

A diagram on 2f vertices is a perfect matching of two rows of f vertices.
Vertices are labelled 1..2f: label i (1 <= i <= f) is the i-th top vertex,
label f+j the j-th bottom vertex.  Edges inside one row are called arcs,
edges across rows vertical edges; a diagram with k arcs per row is a k-arc
diagram.  A junction is a one-row graph on f vertices with k disjoint arcs.

Composition stacks the right factor below the left one, identifies the
middle rows and prunes closed cycles, whose number is returned alongside
the composite diagram.  Everything here is exact, immutable and hashable.
"""

from functools import reduce
from itertools import combinations
from math import factorial

from .backend import compose_partner


class Permutation:
    """A permutation of 1..m, stored as the tuple of images.

    Composition is left-to-right: (a * b)(i) == b(a(i)).
    """

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @staticmethod
    def identity(m):
        return Permutation(range(1, m + 1))

    @staticmethod
    def transposition(m, i, j):
        images = list(range(1, m + 1))
        images[i - 1], images[j - 1] = j, i
        return Permutation(images)

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    def __mul__(self, other):
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(other.images[i - 1] for i in self.images)

    def inverse(self):
        inv = [0] * self.degree
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(inv)

    def sign(self):
        seen = [False] * self.degree
        sign = 1
        for i in range(self.degree):
            if seen[i]:
                continue
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = self.images[j] - 1
                length += 1
            if length % 2 == 0:
                sign = -sign
        return sign

    def cycle_type(self):
        """Cycle lengths, weakly decreasing."""
        seen = [False] * self.degree
        lengths = []
        for i in range(self.degree):
            if seen[i]:
                continue
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = self.images[j] - 1
                length += 1
            lengths.append(length)
        return tuple(sorted(lengths, reverse=True))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(("perm", self.images))

    def __repr__(self):
        return f"Permutation({list(self.images)})"


def all_permutations(m):
    """All of S_m in lexicographic image order."""
    from itertools import permutations as _perms

    return [Permutation(p) for p in _perms(range(1, m + 1))]


class Diagram:
    """Perfect matching on two rows of f vertices; immutable, structurally hashable.

    Canonical storage is the 0-based partner array (as bytes); the public
    ``edges`` view lists sorted 1-based pairs in lexicographic order.
    """

    __slots__ = ("f", "partner")

    def __init__(self, f, partner):
        if len(partner) != 2 * f:
            raise ValueError("partner array must have length 2f")
        pb = bytes(partner)
        for i, j in enumerate(pb):
            if j >= 2 * f or j == i or pb[j] != i:
                raise ValueError("not a perfect matching")
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "partner", pb)

    @staticmethod
    def from_edges(f, edges):
        """Build from f unordered 1-based label pairs covering 1..2f."""
        partner = bytearray(2 * f)
        seen = [False] * (2 * f)
        count = 0
        for u, v in edges:
            if not (1 <= u <= 2 * f and 1 <= v <= 2 * f) or u == v:
                raise ValueError(f"bad edge ({u},{v}) for f={f}")
            if seen[u - 1] or seen[v - 1]:
                raise ValueError(f"vertex reused in edge ({u},{v})")
            seen[u - 1] = seen[v - 1] = True
            partner[u - 1] = v - 1
            partner[v - 1] = u - 1
            count += 1
        if count != f:
            raise ValueError(f"expected {f} edges, got {count}")
        return Diagram(f, bytes(partner))

    @property
    def edges(self):
        return tuple(
            (i + 1, self.partner[i] + 1)
            for i in range(2 * self.f)
            if self.partner[i] > i
        )

    @property
    def arc_count(self):
        """Number of top arcs (equals the number of bottom arcs)."""
        f = self.f
        return sum(1 for i in range(f) if self.partner[i] < f) // 2

    def top_junction(self):
        f = self.f
        partner = bytearray(range(f))
        for i in range(f):
            if self.partner[i] < f:
                partner[i] = self.partner[i]
        return Junction(f, bytes(partner))

    def bottom_junction(self):
        f = self.f
        partner = bytearray(range(f))
        for i in range(f):
            j = self.partner[f + i]
            if j >= f:
                partner[i] = j - f
        return Junction(f, bytes(partner))

    def vertical_edges(self):
        """(top label, bottom label) pairs, sorted by top label."""
        f = self.f
        return tuple(
            (i + 1, self.partner[i] + 1) for i in range(f) if self.partner[i] >= f
        )

    def __eq__(self, other):
        return (
            isinstance(other, Diagram)
            and self.f == other.f
            and self.partner == other.partner
        )

    def __lt__(self, other):
        return (self.f, self.partner) < (other.f, other.partner)

    def __hash__(self):
        return hash(("diagram", self.f, self.partner))

    def __repr__(self):
        inner = ",".join(f"{u}-{v}" for u, v in self.edges)
        return f"Diagram(f={self.f}; {inner})"


class Junction:
    """Partial matching with k disjoint arcs on one row of f vertices.

    Stored as a partner array with partner[i] == i for isolated vertices.
    """

    __slots__ = ("f", "partner")

    def __init__(self, f, partner):
        if len(partner) != f:
            raise ValueError("partner array must have length f")
        pb = bytes(partner)
        for i, j in enumerate(pb):
            if j >= f or pb[j] != i:
                raise ValueError("not a partial matching")
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "partner", pb)

    @staticmethod
    def from_arcs(f, arcs):
        partner = bytearray(range(f))
        for u, v in arcs:
            if not (1 <= u <= f and 1 <= v <= f) or u == v:
                raise ValueError(f"bad arc ({u},{v}) for f={f}")
            if partner[u - 1] != u - 1 or partner[v - 1] != v - 1:
                raise ValueError(f"vertex reused in arc ({u},{v})")
            partner[u - 1] = v - 1
            partner[v - 1] = u - 1
        return Junction(f, bytes(partner))

    @property
    def arcs(self):
        return tuple(
            (i + 1, self.partner[i] + 1)
            for i in range(self.f)
            if self.partner[i] > i
        )

    @property
    def k(self):
        return sum(1 for i in range(self.f) if self.partner[i] != i) // 2

    @property
    def isolated(self):
        """Isolated vertices, 1-based, ascending."""
        return tuple(i + 1 for i in range(self.f) if self.partner[i] == i)

    def __eq__(self, other):
        return (
            isinstance(other, Junction)
            and self.f == other.f
            and self.partner == other.partner
        )

    def __lt__(self, other):
        return (self.f, self.partner) < (other.f, other.partner)

    def __hash__(self):
        return hash(("junction", self.f, self.partner))

    def __repr__(self):
        inner = ",".join(f"{u}-{v}" for u, v in self.arcs) or "-"
        return f"Junction(f={self.f}, k={self.k}; {inner})"


class ArcStructure:
    """Top and bottom junctions of a diagram, as one value."""

    __slots__ = ("top", "bottom")

    def __init__(self, top, bottom):
        if top.f != bottom.f or top.k != bottom.k:
            raise ValueError("top and bottom junctions must match in size and arc count")
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "bottom", bottom)

    def __eq__(self, other):
        return (
            isinstance(other, ArcStructure)
            and self.top == other.top
            and self.bottom == other.bottom
        )

    def __hash__(self):
        return hash(("arcstructure", self.top, self.bottom))

    def __repr__(self):
        return f"ArcStructure(top={self.top!r}, bottom={self.bottom!r})"


# ---------------------------------------------------------------------------
# core operations


def compose_diagrams(a, b, _kernel=compose_partner):
    """Stack b below a; return (composite diagram, number of pruned cycles)."""
    if a.f != b.f:
        raise ValueError(f"size mismatch: f={a.f} vs f={b.f}")
    partner, loops = _kernel(a.partner, b.partner, a.f)
    return Diagram(a.f, partner), loops


def identity_diagram(f):
    return Diagram(f, bytes(list(range(f, 2 * f)) + list(range(f))))


def make_d_sigma(sigma, f=None):
    """Zero-arc diagram joining top i with bottom sigma(i)."""
    if f is None:
        f = sigma.degree
    if sigma.degree != f:
        raise ValueError("permutation degree must equal f")
    partner = bytearray(2 * f)
    for i in range(1, f + 1):
        j = f + sigma(i)
        partner[i - 1] = j - 1
        partner[j - 1] = i - 1
    return Diagram(f, bytes(partner))


def make_h(i, j, f):
    """One-arc generator: arcs {i,j} top and bottom, verticals elsewhere."""
    if i == j:
        raise ValueError(f"generator indices must differ, got i=j={i}")
    if not (1 <= i <= f and 1 <= j <= f):
        raise ValueError(f"indices out of range 1..{f}")
    partner = bytearray(range(f, 2 * f)) + bytearray(range(f))
    partner[i - 1], partner[j - 1] = j - 1, i - 1
    partner[f + i - 1], partner[f + j - 1] = f + j - 1, f + i - 1
    return Diagram(f, bytes(partner))


def arc_structure(d):
    return ArcStructure(d.top_junction(), d.bottom_junction())


def sigma_part(d):
    """Permutation carrying top vertical ranks to bottom vertical ranks."""
    top = d.top_junction().isolated
    bottom = d.bottom_junction().isolated
    bottom_rank = {label: r for r, label in enumerate(bottom, start=1)}
    images = [0] * len(top)
    for r, u in enumerate(top, start=1):
        images[r - 1] = bottom_rank[d.partner[u - 1] + 1 - d.f]
    return Permutation(images)


def diagram_from_parts(sigma, top, bottom):
    """Inverse of (sigma_part, arc_structure): rebuild the diagram."""
    if top.f != bottom.f or top.k != bottom.k:
        raise ValueError("junction sizes or arc counts differ")
    f = top.f
    if sigma.degree != f - 2 * top.k:
        raise ValueError("permutation degree must be f - 2k")
    edges = list(top.arcs)
    edges += [(f + u, f + v) for u, v in bottom.arcs]
    tops = top.isolated
    bottoms = bottom.isolated
    edges += [(tops[r - 1], f + bottoms[sigma(r) - 1]) for r in range(1, sigma.degree + 1)]
    return Diagram.from_edges(f, edges)


def middle_diagram(f, k):
    """The k-arc diagram with arcs {2t-1,2t} in both rows and ascending verticals."""
    edges = []
    for t in range(1, k + 1):
        edges.append((2 * t - 1, 2 * t))
        edges.append((f + 2 * t - 1, f + 2 * t))
    for i in range(2 * k + 1, f + 1):
        edges.append((i, f + i))
    return Diagram.from_edges(f, edges)


def factorize(d):
    """Express d as d_sigma * middle_diagram(f,k) * d_rho with zero loops.

    Canonical choice: arcs enumerated by smaller endpoint, verticals by top
    vertex; sigma and rho never invert the pairs (2t-1, 2t).
    """
    f = d.f
    top_arcs = sorted(d.top_junction().arcs)
    bottom_arcs = sorted(d.bottom_junction().arcs)
    k = len(top_arcs)
    sigma_inv = [0] * f
    rho = [0] * f
    for t, (a, b) in enumerate(top_arcs, start=1):
        sigma_inv[2 * t - 2] = a
        sigma_inv[2 * t - 1] = b
    for t, (c, e) in enumerate(bottom_arcs, start=1):
        rho[2 * t - 2] = c
        rho[2 * t - 1] = e
    for slot, (u, w) in enumerate(d.vertical_edges(), start=2 * k + 1):
        sigma_inv[slot - 1] = u
        rho[slot - 1] = w - f
    sigma = Permutation(sigma_inv).inverse()
    return sigma, k, Permutation(rho)


def recompose(sigma, k, rho, f=None):
    """Product d_sigma * middle * d_rho, asserting no loops are pruned."""
    if f is None:
        f = sigma.degree
    left = make_d_sigma(sigma, f)
    mid = middle_diagram(f, k)
    right = make_d_sigma(rho, f)
    d1, c1 = compose_diagrams(left, mid)
    d2, c2 = compose_diagrams(d1, right)
    if c1 or c2:
        raise AssertionError("canonical factorization must compose without loops")
    return d2


def sign(d):
    """The factorization sign sgn(sigma) * (-1)^k * sgn(rho)."""
    sigma, k, rho = factorize(d)
    return sigma.sign() * (-1) ** k * rho.sign()


def s2f_act(pi, d):
    """Relabel the 2f vertices of d by the permutation pi of 1..2f."""
    if pi.degree != 2 * d.f:
        raise ValueError("permutation degree must be 2f")
    return Diagram.from_edges(d.f, [(pi(u), pi(v)) for u, v in d.edges])


def act_on_junction(d, v):
    """Act with d on the junction v placed below it.

    Returns None when inadmissible (the result would gain arcs), otherwise
    (result junction, loop count, pi) where pi carries the rank of each
    isolated vertex of the result to the rank of the isolated vertex of v
    it is wired to.
    """
    if d.f != v.f:
        raise ValueError(f"size mismatch: f={d.f} vs f={v.f}")
    f = d.f
    pd = d.partner
    pv = v.partner
    visited = bytearray(f)
    result_partner = bytearray(range(f))
    transits = []  # (top vertex, isolated v vertex), 0-based

    for i in range(f):
        j = pd[i]
        if j < f:
            result_partner[i] = j
            continue
        if visited[j - f]:
            continue
        m = j - f
        # walk the middle; on arrival from the d side, leave via v and back.
        while True:
            visited[m] = 1
            if pv[m] == m:
                transits.append((i, m))
                end_top = -1
                break
            m2 = pv[m]
            visited[m2] = 1
            j2 = pd[f + m2]
            if j2 < f:
                end_top = j2
                break
            m = j2 - f
        if end_top >= 0:
            result_partner[i] = end_top
            result_partner[end_top] = i

    loops = 0
    for m in range(f):
        if visited[m]:
            continue
        if pv[m] == m:
            # isolated v vertex never reached from the top: its path ends at
            # another isolated v vertex, so the result gains an arc.
            return None
        loops += 1
        cur = m
        via_v = True
        while True:
            visited[cur] = 1
            cur = pv[cur] if via_v else pd[f + cur] - f
            via_v = not via_v
            if cur == m and via_v:
                break

    result = Junction(f, bytes(result_partner))
    if result.k != v.k:
        return None
    iso_result = {label - 1: r for r, label in enumerate(result.isolated, start=1)}
    iso_v = {idx: r for r, idx in enumerate(sorted(m for _, m in transits), start=1)}
    images = [0] * len(transits)
    for i, m in transits:
        images[iso_result[i] - 1] = iso_v[m]
    return result, loops, Permutation(images)


def glue_junctions(b, t):
    """Overlay the bottom junction b of an upper factor with the top junction t
    of a lower factor (vertex i identified with vertex i).

    Returns None when the product would gain arcs (two same-side isolated
    vertices joined by a path), otherwise (loop count, pi) where pi carries
    isolated-vertex ranks of b to isolated-vertex ranks of t along the paths.
    """
    if b.f != t.f:
        raise ValueError(f"size mismatch: f={b.f} vs f={t.f}")
    if b.k != t.k:
        raise ValueError(f"arc count mismatch: k={b.k} vs k={t.k}")
    f = b.f
    pb = b.partner
    pt = t.partner
    visited = bytearray(f)
    pairs = []  # (isolated-in-b vertex, isolated-in-t vertex), 0-based

    for start in range(f):
        if visited[start] or pb[start] != start:
            continue
        # path starts open on the b side; alternate t-arc, b-arc.
        visited[start] = 1
        m = start
        via_t = True
        while True:
            if via_t:
                if pt[m] == m:
                    pairs.append((start, m))
                    break
                m = pt[m]
            else:
                if pb[m] == m:
                    return None  # both endpoints open on the b side
                m = pb[m]
            visited[m] = 1
            via_t = not via_t

    for m in range(f):
        if not visited[m] and pt[m] == m:
            return None  # leftover t-side path: both endpoints open on the t side

    loops = 0
    for m in range(f):
        if visited[m]:
            continue
        loops += 1
        cur = m
        via_t = True
        while True:
            visited[cur] = 1
            cur = pt[cur] if via_t else pb[cur]
            via_t = not via_t
            if cur == m and via_t:
                break

    rank_b = {idx: r for r, idx in enumerate(sorted(p for p, _ in pairs), start=1)}
    rank_t = {idx: r for r, idx in enumerate(sorted(q for _, q in pairs), start=1)}
    images = [0] * len(pairs)
    for p, q in pairs:
        images[rank_b[p] - 1] = rank_t[q]
    return loops, Permutation(images)


def insert_arcs(d, top_pair, bottom_pair):
    """Embed a diagram on f-2 into one on f by inserting a top arc at
    top_pair=(i,j) and a bottom arc at bottom_pair=(h,k); old labels shift
    order-preservingly into the remaining slots."""
    f = d.f + 2
    i, j = top_pair
    h, k = bottom_pair
    if not (1 <= i < j <= f):
        raise ValueError(f"top pair must satisfy 1 <= i < j <= {f}")
    if not (1 <= h < k <= f):
        raise ValueError(f"bottom pair must satisfy 1 <= h < k <= {f}")
    top_slots = [t for t in range(1, f + 1) if t not in (i, j)]
    bottom_slots = [t for t in range(1, f + 1) if t not in (h, k)]

    def relabel(label):
        if label <= d.f:
            return top_slots[label - 1]
        return f + bottom_slots[label - d.f - 1]

    edges = [(relabel(u), relabel(v)) for u, v in d.edges]
    edges.append((i, j))
    edges.append((f + h, f + k))
    return Diagram.from_edges(f, edges)


# ---------------------------------------------------------------------------
# enumeration and counting


def vertex_position(label, f):
    """Split a flat label 1..2f into (row, position), rows "top"/"bottom"."""
    if not 1 <= label <= 2 * f:
        raise ValueError(f"label {label} out of range 1..{2 * f}")
    if label <= f:
        return "top", label
    return "bottom", label - f


def vertex_label(row, position, f):
    """Inverse of vertex_position."""
    if not 1 <= position <= f:
        raise ValueError(f"position {position} out of range 1..{f}")
    if row == "top":
        return position
    if row == "bottom":
        return f + position
    raise ValueError(f"row must be 'top' or 'bottom', got {row!r}")


def double_factorial(n):
    """n!! for odd n (and 0!! = (-1)!! = 1)."""
    return reduce(lambda a, b: a * b, range(n, 0, -2), 1)


def perfect_matchings(labels):
    """All perfect matchings of the label list, deterministic order."""
    labels = list(labels)
    if not labels:
        yield ()
        return
    first = labels[0]
    for idx in range(1, len(labels)):
        rest = labels[1:idx] + labels[idx + 1 :]
        for sub in perfect_matchings(rest):
            yield ((first, labels[idx]),) + sub


def enumerate_diagrams(f):
    """All (2f-1)!! diagrams, sorted by canonical partner array."""
    out = [Diagram.from_edges(f, m) for m in perfect_matchings(range(1, 2 * f + 1))]
    out.sort()
    return out


def enumerate_diagrams_with_arcs(f, k):
    return [d for d in enumerate_diagrams(f) if d.arc_count == k]


def enumerate_junctions(f, k):
    """All (f choose 2k)(2k-1)!! junctions with k arcs, sorted."""
    out = []
    for support in combinations(range(1, f + 1), 2 * k):
        for arcs in perfect_matchings(support):
            out.append(Junction.from_arcs(f, arcs))
    out.sort()
    return out


def junction_count(f, k):
    """Closed form (f choose 2k)(2k-1)!!."""
    if 2 * k > f:
        return 0
    return (
        factorial(f) // (factorial(2 * k) * factorial(f - 2 * k))
    ) * double_factorial(2 * k - 1)


# ---------------------------------------------------------------------------
# text encoding and rendering


def encode_diagram(d):
    """Compact text form ``f=4;12|34/13|24[/perm]``.

    First segment: top arcs, second: bottom arcs (both as digit pairs or
    comma-separated labels, arcs separated by ``|``).  Verticals connect the
    remaining vertices in ascending rank order unless a third segment spells
    out the rank permutation as the list of images.
    """

    def fmt_vertex_list(labels):
        if d.f <= 9:
            return "".join(str(v) for v in labels)
        return ",".join(str(v) for v in labels)

    top = "|".join(fmt_vertex_list(arc) for arc in sorted(d.top_junction().arcs))
    bottom = "|".join(fmt_vertex_list(arc) for arc in sorted(d.bottom_junction().arcs))
    sigma = sigma_part(d)
    text = f"f={d.f};{top}/{bottom}"
    if sigma != Permutation.identity(sigma.degree):
        text += "/" + fmt_vertex_list(sigma.images)
    return text


class DiagramParseError(ValueError):
    """Parse failure with the offending position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


def parse_diagram(text):
    """Inverse of encode_diagram."""
    if not text.startswith("f="):
        raise DiagramParseError("expected 'f=' prefix", 0)
    semi = text.find(";")
    if semi < 0:
        raise DiagramParseError("expected ';' after the size field", len(text))
    try:
        f = int(text[2:semi])
    except ValueError:
        raise DiagramParseError("size field is not an integer", 2) from None
    if f < 1:
        raise DiagramParseError("size must be positive", 2)
    body = text[semi + 1 :]
    segments = body.split("/")
    if len(segments) not in (2, 3):
        raise DiagramParseError("expected 2 or 3 '/'-separated segments", semi + 1)

    def parse_labels(segment, offset):
        if not segment:
            return []
        if "," in segment:
            parts = segment.split(",")
        else:
            parts = list(segment)
        labels = []
        pos = offset
        for p in parts:
            try:
                v = int(p)
            except ValueError:
                raise DiagramParseError(f"bad label {p!r}", pos) from None
            if not 1 <= v <= f:
                raise DiagramParseError(f"label {v} out of range 1..{f}", pos)
            labels.append(v)
            pos += len(p) + 1
        return labels

    def parse_arcs(segment, offset):
        arcs = []
        pos = offset
        if segment:
            for chunk in segment.split("|"):
                labels = parse_labels(chunk, pos)
                if len(labels) != 2:
                    raise DiagramParseError("arcs need exactly two labels", pos)
                arcs.append(tuple(labels))
                pos += len(chunk) + 1
        return arcs

    offset = semi + 1
    top_arcs = parse_arcs(segments[0], offset)
    offset += len(segments[0]) + 1
    bottom_arcs = parse_arcs(segments[1], offset)
    offset += len(segments[1]) + 1
    try:
        top = Junction.from_arcs(f, top_arcs)
        bottom = Junction.from_arcs(f, bottom_arcs)
    except ValueError as exc:
        raise DiagramParseError(str(exc), semi + 1) from None
    if top.k != bottom.k:
        raise DiagramParseError("top and bottom arc counts differ", semi + 1)
    m = f - 2 * top.k
    if len(segments) == 3 and segments[2]:
        images = parse_labels(segments[2].replace("|", ","), offset)
        if sorted(images) != list(range(1, m + 1)):
            raise DiagramParseError(f"permutation segment must list 1..{m}", offset)
        sigma = Permutation(images)
    else:
        sigma = Permutation.identity(m)
    return diagram_from_parts(sigma, top, bottom)


def render_diagram(d):
    """ASCII picture: two rows of 'o' glyphs, each edge routed on its own lane."""
    f = d.f
    col = {v: 2 * (v - 1) for v in range(1, f + 1)}
    width = 2 * f - 1
    edges = sorted(d.edges)
    lanes = len(edges)
    height = lanes + 4
    canvas = [[" "] * width for _ in range(height)]
    for v in range(1, f + 1):
        canvas[0][col[v]] = str(v % 10)
        canvas[1][col[v]] = "o"
        canvas[height - 2][col[v]] = "o"
        canvas[height - 1][col[v]] = str(v % 10)

    def vline(c, r0, r1):
        for r in range(r0, r1 + 1):
            canvas[r][c] = "|" if canvas[r][c] in (" ", "-") else "+"

    def hline(r, c0, c1):
        for c in range(c0, c1 + 1):
            if canvas[r][c] == " ":
                canvas[r][c] = "-"
        canvas[r][c0] = "+"
        canvas[r][c1] = "+"

    for lane, (u, v) in enumerate(edges):
        r = 2 + lane
        if u <= f and v <= f:  # top arc
            c0, c1 = sorted((col[u], col[v]))
            hline(r, c0, c1)
            vline(c0, 2, r - 1)
            vline(c1, 2, r - 1)
        elif u > f and v > f:  # bottom arc
            c0, c1 = sorted((col[u - f], col[v - f]))
            hline(r, c0, c1)
            vline(c0, r + 1, height - 3)
            vline(c1, r + 1, height - 3)
        else:  # vertical edge
            top, bottom = (u, v) if u <= f else (v, u)
            c0, c1 = col[top], col[bottom - f]
            if c0 == c1:
                vline(c0, 2, height - 3)
            else:
                hline(r, min(c0, c1), max(c0, c1))
                vline(c0, 2, r - 1)
                vline(c1, r + 1, height - 3)
    return "\n".join("".join(row).rstrip() for row in canvas)
