"""Rational tangles, two-bridge branch loci and their Goeritz determinants.

A rational tangle is drawn with its four ends NW, SW, SE, NE laid out left to
right along a horizontal line (the order in which they meet the boundary of
the tangle ball, counterclockwise).  Horizontal twists (the ends NE, SE) are
then crossings between strand positions 3 and 4, vertical twists (SW, SE)
are crossings between positions 2 and 3, and position 1 never crosses.  The
numerator closure caps positions (1, 4) and (2, 3) at the bottom.

Diagrams are stored in a PD-style encoding: every crossing is a 4-tuple of
edge labels listed counterclockwise starting from the incoming under-edge,
plus the crossing sign.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ._linalg import exact_det
from .slopes import Slope, twist_exponents

# Refuse to build diagrams past this many crossings; the Goeritz determinant
# is cubic in the number of regions.
MAX_CROSSINGS = 2000


@dataclass(frozen=True)
class TwistVector:
    """Signed twist counts, innermost twist first.

    The last entry is a horizontal twist, the one before it vertical, and so
    on alternately towards the front.
    """

    entries: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(a) for a in self.entries))

    def fraction(self) -> Slope:
        """Evaluate f <- a_1, then f <- a_i - 1/f, with 1/0 read as infinity."""
        n, d = 1, 0
        for a in self.entries:
            n, d = a * n - d, n
        return Slope(n, d)

    def crossing_count(self) -> int:
        return sum(abs(a) for a in self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


def slope_to_twist_vector(s: Slope) -> TwistVector:
    """Twist vector whose fraction is ``s``, read off the canonical S/T word.

    The word T^a1 S T^a2 S ... T^ak S is applied to the trivial tangle from
    the right, so the innermost twist is a_k.
    """
    return TwistVector(tuple(reversed(twist_exponents(s))))


@dataclass(frozen=True)
class PlanarDiagram:
    """Link diagram: crossings as (a, b, c, d, sign) plus crossingless loops."""

    crossings: tuple
    free_loops: int = 0
    components: tuple = field(init=False, compare=False)

    def __post_init__(self):
        crossings = tuple(
            (int(a), int(b), int(c), int(d), int(sign)) for a, b, c, d, sign in self.crossings
        )
        object.__setattr__(self, "crossings", crossings)
        if self.free_loops < 0:
            raise ValueError("negative number of free loops")
        seen = {}
        for i, x in enumerate(crossings):
            if x[4] not in (1, -1):
                raise ValueError(f"crossing {i} has sign {x[4]}, expected +1 or -1")
            for k in range(4):
                seen.setdefault(x[k], []).append((i, k))
        bad = sorted(label for label, occ in seen.items() if len(occ) != 2)
        if bad:
            raise ValueError(f"arc labels {bad} do not appear exactly twice")
        if not crossings and self.free_loops == 0:
            raise ValueError("diagram has no components")
        object.__setattr__(self, "_slots", seen)
        object.__setattr__(self, "components", self._trace_components())

    def _other_slot(self, slot):
        a, b = self._slots[self.crossings[slot[0]][slot[1]]]
        return b if a == slot else a

    def _trace_components(self):
        """Partition arcs into closed components by going straight through crossings."""
        done = set()
        comps = []
        for i in range(len(self.crossings)):
            for k in range(4):
                if (i, k) in done:
                    continue
                arcs = []
                slot = (i, k)  # entering crossing i at position k
                while slot not in done:
                    out = (slot[0], (slot[1] + 2) % 4)
                    done.add(slot)
                    done.add(out)
                    arcs.append(self.crossings[out[0]][out[1]])
                    slot = self._other_slot(out)
                comps.append(tuple(arcs))
        return tuple(comps) + ((),) * self.free_loops

    @property
    def num_components(self) -> int:
        return len(self.components)

    def faces(self):
        """Regions of the diagram as lists of corners (crossing, k).

        Corner k of a crossing is the sector between its positions k and k+1.
        Walking out along position k+1 keeps the face on the right; arriving
        at position m of the next crossing the face is corner m there.
        """
        seen = set()
        faces = []
        for i in range(len(self.crossings)):
            for k in range(4):
                if (i, k) in seen:
                    continue
                face = []
                corner = (i, k)
                while corner not in seen:
                    seen.add(corner)
                    face.append(corner)
                    c, j = corner
                    corner = self._other_slot((c, (j + 1) % 4))
                faces.append(face)
        return faces

    def is_connected(self) -> bool:
        if self.free_loops:
            return not self.crossings and self.free_loops == 1
        adj = {i: set() for i in range(len(self.crossings))}
        for occ in self._slots.values():
            (a, _), (b, _) = occ
            adj[a].add(b)
            adj[b].add(a)
        stack, reached = [0], {0}
        while stack:
            for j in adj[stack.pop()]:
                if j not in reached:
                    reached.add(j)
                    stack.append(j)
        return len(reached) == len(self.crossings)

    def to_text(self) -> str:
        lines = [f"X {a} {b} {c} {d} {'+' if s > 0 else '-'}" for a, b, c, d, s in self.crossings]
        lines += ["O"] * self.free_loops
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "PlanarDiagram":
        """Parse the line format written by :meth:`to_text`.

        One crossing per line, ``X a b c d +`` or ``X a b c d -``; a line ``O``
        is a crossingless unknotted component.  Blank lines and ``#`` comments
        are ignored.
        """
        crossings, loops = [], 0
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tok = line.split()
            if tok == ["O"]:
                loops += 1
                continue
            if len(tok) != 6 or tok[0] != "X" or tok[5] not in "+-" or len(tok[5]) != 1:
                raise ValueError(f"line {lineno}: expected 'X a b c d +/-', got {raw!r}")
            try:
                labels = [int(t) for t in tok[1:5]]
            except ValueError:
                raise ValueError(f"line {lineno}: arc labels must be integers") from None
            crossings.append((*labels, 1 if tok[5] == "+" else -1))
        return cls(tuple(crossings), loops)


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _plat_diagram(top_caps, twists, bottom_caps) -> PlanarDiagram:
    """Diagram of a braid on four vertical strands closed by caps.

    ``twists`` lists (i, over) from top to bottom: a crossing between
    positions i and i+1, with ``over`` True when the strand running from the
    upper left to the lower right passes over.  Slots (t, j) are the strand
    pieces at position j just above crossing t.
    """
    n = len(twists)
    uf = _UnionFind()
    for t in range(n + 1):
        for j in range(1, 5):
            uf.find((t, j))
    for a, b in top_caps:
        uf.union((0, a), (0, b))
    for a, b in bottom_caps:
        uf.union((n, a), (n, b))
    raw = []
    for t, (i, over) in enumerate(twists):
        for j in range(1, 5):
            if j not in (i, i + 1):
                uf.union((t, j), (t + 1, j))
        tl, tr, bl, br = (t, i), (t, i + 1), (t + 1, i), (t + 1, i + 1)
        # counterclockwise around the crossing: TR, TL, BL, BR
        raw.append((tr, tl, bl, br) if over else (tl, bl, br, tr))
    labels = {}
    crossings = []
    for tup in raw:
        crossings.append(tuple(labels.setdefault(uf.find(s), len(labels)) for s in tup))
    classes = {uf.find(s) for s in uf.parent}
    loops = len(classes) - len(labels)
    return _orient(crossings, loops)


def _orient(unoriented, loops) -> PlanarDiagram:
    """Orient each component, relabel arcs along it and compute crossing signs.

    ``unoriented`` holds counterclockwise 4-tuples whose under-strand sits at
    positions 0 and 2, started at either end of it.
    """
    slots = {}
    for i, x in enumerate(unoriented):
        for k in range(4):
            slots.setdefault(x[k], []).append((i, k))

    def other(slot):
        a, b = slots[unoriented[slot[0]][slot[1]]]
        return b if a == slot else a

    incoming = set()
    relabel = {}
    for i in range(len(unoriented)):
        for k in range(4):
            if (i, k) in incoming or (i, (k + 2) % 4) in incoming:
                continue
            slot = (i, k)
            while slot not in incoming:
                incoming.add(slot)
                out = (slot[0], (slot[1] + 2) % 4)
                relabel[unoriented[out[0]][out[1]]] = len(relabel) + 1
                slot = other(out)
    crossings = []
    for i, x in enumerate(unoriented):
        start = 0 if (i, 0) in incoming else 2
        a, b, c, d = (relabel[x[(start + j) % 4]] for j in range(4))
        # positive when the over-strand runs from position 3 to position 1
        sign = 1 if (i, (start + 3) % 4) in incoming else -1
        crossings.append((a, b, c, d, sign))
    return PlanarDiagram(tuple(crossings), loops)


def tangle_closure_diagram(vector: TwistVector) -> PlanarDiagram:
    """Numerator closure of the rational tangle with the given twist vector."""
    entries = vector.entries
    if vector.crossing_count() > MAX_CROSSINGS:
        raise ValueError(
            f"diagram would have {vector.crossing_count()} crossings (limit {MAX_CROSSINGS})"
        )
    k = len(entries)
    # start from the infinity tangle (caps 1-2, 3-4) or the zero tangle (1-4, 2-3)
    top = [(1, 2), (3, 4)] if k % 2 == 0 else [(1, 4), (2, 3)]
    twists = []
    for j, a in enumerate(entries):
        horizontal = (k - 1 - j) % 2 == 0
        if horizontal:
            twists += [(3, a > 0)] * abs(a)
        else:
            # a vertical entry a adds -a vertical twists; +1 is the lower-left-over crossing
            twists += [(2, a > 0)] * abs(a)
    return _plat_diagram(top, twists, [(1, 4), (2, 3)])


def two_bridge_diagram(s: Slope) -> PlanarDiagram:
    """Diagram of the two-bridge link b(p, q), the closure of the p/q tangle."""
    return tangle_closure_diagram(slope_to_twist_vector(s))


def goeritz_matrix(d: PlanarDiagram):
    """Goeritz matrix on the white regions (all of them, not yet reduced).

    The two sectors swept when the over-strand is turned counterclockwise are
    corners 1 and 3; a crossing counts +1 when those are white, -1 otherwise.
    """
    faces = d.faces()
    corner_face = {}
    for f, corners in enumerate(faces):
        for c in corners:
            corner_face[c] = f
    color = {0: 0}
    stack = [0]
    # adjacent corners (i, k) and (i, k+1) lie in faces of opposite colour
    while stack:
        f = stack.pop()
        for i, k in faces[f]:
            for g in (corner_face[(i, (k + 1) % 4)], corner_face[(i, (k - 1) % 4)]):
                want = 1 - color[f]
                if g not in color:
                    color[g] = want
                    stack.append(g)
                elif color[g] != want:
                    raise ValueError("diagram is not checkerboard colourable")
    white = [f for f in range(len(faces)) if color[f] == 0]
    index = {f: n for n, f in enumerate(white)}
    g = [[0] * len(white) for _ in white]
    for i in range(len(d.crossings)):
        if color[corner_face[(i, 1)]] == 0:
            eta, fa, fb = 1, corner_face[(i, 1)], corner_face[(i, 3)]
        else:
            eta, fa, fb = -1, corner_face[(i, 0)], corner_face[(i, 2)]
        if fa == fb:
            continue
        a, b = index[fa], index[fb]
        g[a][b] -= eta
        g[b][a] -= eta
    for a in range(len(white)):
        g[a][a] = -sum(g[a][b] for b in range(len(white)) if b != a)
    return g


def diagram_determinant(d: PlanarDiagram) -> int:
    """|det| of the reduced Goeritz matrix; 0 for split diagrams."""
    if not d.crossings:
        return 1 if d.free_loops == 1 else 0
    if not d.is_connected():
        return 0
    g = goeritz_matrix(d)
    reduced = [row[1:] for row in g[1:]]
    return abs(exact_det(reduced))


@dataclass(frozen=True)
class UnknottedArc:
    """The knot's image in the quotient is an unknotted arc."""


@dataclass(frozen=True)
class OpaqueQuotientArc:
    """A knotted quotient arc, known by name only."""

    knot: str


@dataclass(frozen=True)
class BranchLocusDescriptor:
    outer: object
    inner: TwistVector
    slope: Slope

    def __post_init__(self):
        if self.inner.fraction() != self.slope:
            raise ValueError("inner twist vector does not evaluate to the filling slope")

    def diagram(self) -> Optional[PlanarDiagram]:
        """Realized branch link, or None when the outer arc is opaque."""
        if isinstance(self.outer, UnknottedArc):
            return tangle_closure_diagram(self.inner)
        return None

    def __str__(self):
        vec = "(" + ", ".join(map(str, self.inner.entries)) + ")"
        if isinstance(self.outer, UnknottedArc):
            return f"b({self.slope.p},{self.slope.q}) from twist vector {vec}"
        return f"quotient arc of {self.outer.knot} with the {self.slope} tangle {vec} glued in"


def branch_locus(outer, s: Slope) -> BranchLocusDescriptor:
    if not isinstance(outer, (UnknottedArc, OpaqueQuotientArc)):
        raise TypeError("outer must be UnknottedArc or OpaqueQuotientArc")
    return BranchLocusDescriptor(outer, slope_to_twist_vector(s), s)
