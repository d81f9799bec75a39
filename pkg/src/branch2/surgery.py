"""Rationally framed links, Rolfsen twists and first homology.

Only the framing and linking data are tracked.  Twisting along an unknotted
component changes that data in a closed form, and the first homology of the
surgered manifold is read off the linking presentation

    p_i mu_i + q_i * sum_j lk(i, j) mu_j = 0.

Whether a component is unknotted is the caller's claim; it is never checked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from ._linalg import exact_det
from .slopes import Slope

INFINITE = math.inf


@dataclass(frozen=True)
class Component:
    name: str
    framing: Slope
    unknotted: bool = True


@dataclass(frozen=True)
class FramedLink:
    components: tuple
    linking: tuple

    def __post_init__(self):
        comps = tuple(self.components)
        lk = tuple(tuple(int(x) for x in row) for row in self.linking)
        n = len(comps)
        if len(lk) != n or any(len(row) != n for row in lk):
            raise ValueError(f"linking matrix must be {n}x{n}")
        for i in range(n):
            if lk[i][i] != 0:
                raise ValueError(f"linking matrix diagonal entry {i} is {lk[i][i]}, expected 0")
            for j in range(i):
                if lk[i][j] != lk[j][i]:
                    raise ValueError(f"linking matrix not symmetric at ({i}, {j})")
        names = [c.name for c in comps]
        if len(set(names)) != n:
            raise ValueError("component names must be distinct")
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "linking", lk)

    @classmethod
    def unknot(cls, framing: Slope, name: str = "K") -> "FramedLink":
        return cls((Component(name, framing, True),), ((0,),))

    def __len__(self):
        return len(self.components)

    def index(self, key) -> int:
        """Component index from an int or a component name."""
        if isinstance(key, int):
            if not -len(self) <= key < len(self):
                raise ValueError(f"no component {key}")
            return key % len(self)
        for i, c in enumerate(self.components):
            if c.name == key:
                return i
        try:
            return self.index(int(key))
        except ValueError:
            raise ValueError(f"no component named {key!r}") from None

    def presentation_matrix(self):
        n = len(self)
        return [
            [
                c.framing.p if i == j else c.framing.q * self.linking[i][j]
                for j in range(n)
            ]
            for i, c in enumerate(self.components)
        ]

    def delete(self, j: int) -> "FramedLink":
        keep = [i for i in range(len(self)) if i != j]
        return FramedLink(
            tuple(self.components[i] for i in keep),
            tuple(tuple(self.linking[i][k] for k in keep) for i in keep),
        )

    def drop_infinite(self) -> "FramedLink":
        """Remove components with framing infinity (trivial surgery)."""
        link = self
        for j in reversed(range(len(self))):
            if self.components[j].framing.is_infinite:
                link = link.delete(j)
        return link

    def to_text(self) -> str:
        lines = [f"components: {len(self)}"]
        for c in self.components:
            lines.append(f"{c.name} {c.framing} {'yes' if c.unknotted else 'no'}")
        for row in self.linking:
            lines.append(" ".join(str(x) for x in row))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "FramedLink":
        """Parse the ``components: n`` format; ``#`` starts a comment."""
        lines = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if line:
                lines.append((lineno, line))
        if not lines:
            raise ValueError("empty framed link file")
        lineno, head = lines[0]
        key, _, value = head.partition(":")
        if key.strip() != "components" or not value.strip().isdigit():
            raise ValueError(f"line {lineno}: expected 'components: n'")
        n = int(value)
        if len(lines) != 1 + 2 * n:
            raise ValueError(f"expected {2 * n} lines after the header, found {len(lines) - 1}")
        comps = []
        for lineno, line in lines[1 : n + 1]:
            tok = line.split()
            if len(tok) != 3:
                raise ValueError(f"line {lineno}: expected 'name framing unknotted?'")
            flag = tok[2].lower()
            if flag not in ("yes", "no", "true", "false", "1", "0"):
                raise ValueError(f"line {lineno}: unknotted flag must be yes or no")
            try:
                framing = Slope.parse(tok[1])
            except ValueError as err:
                raise ValueError(f"line {lineno}: {err}") from None
            comps.append(Component(tok[0], framing, flag in ("yes", "true", "1")))
        rows = []
        for lineno, line in lines[n + 1 :]:
            try:
                row = [int(x) for x in line.split()]
            except ValueError:
                raise ValueError(f"line {lineno}: linking entries must be integers") from None
            if len(row) != n:
                raise ValueError(f"line {lineno}: expected {n} linking entries")
            rows.append(row)
        try:
            return cls(tuple(comps), tuple(map(tuple, rows)))
        except ValueError as err:
            raise ValueError(f"invalid framed link: {err}") from None


def h1_order(link: FramedLink):
    """Order of H_1 of the surgered manifold, or INFINITE."""
    det = exact_det(link.presentation_matrix())
    return INFINITE if det == 0 else abs(det)


def rolfsen_twist(link: FramedLink, j, n: int) -> FramedLink:
    """Apply n full twists along the unknotted component j."""
    j = link.index(j)
    target = link.components[j]
    if not target.unknotted:
        raise ValueError(f"component {target.name!r} is not flagged unknotted")
    lk = link.linking
    size = len(link)
    comps = []
    for i, c in enumerate(link.components):
        a, b = c.framing.p, c.framing.q
        if i == j:
            new = Slope(a, b + n * a)
        else:
            new = Slope(a + n * lk[i][j] ** 2 * b, b)
        comps.append(replace(c, framing=new))
    rows = []
    for i in range(size):
        row = []
        for k in range(size):
            if i == k or i == j or k == j:
                row.append(lk[i][k])
            else:
                row.append(lk[i][k] + n * lk[i][j] * lk[k][j])
        rows.append(tuple(row))
    return FramedLink(tuple(comps), tuple(rows))


def blow_down(link: FramedLink, j) -> FramedLink:
    """Remove a +1 or -1 framed unknot, twisting the rest of the link."""
    j = link.index(j)
    c = link.components[j]
    if not c.unknotted:
        raise ValueError(f"component {c.name!r} is not flagged unknotted")
    if c.framing.q != 1 or abs(c.framing.p) != 1:
        raise ValueError(f"can only blow down a +1 or -1 framed unknot, not {c.framing}")
    twisted = rolfsen_twist(link, j, -c.framing.p)
    assert twisted.components[j].framing.is_infinite
    return twisted.delete(j)
