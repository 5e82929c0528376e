"""Generators for the well-indumatched graph families.

Unicyclic families place their cycle on vertices ``0..L-1`` in cycle order,
with the attachment vertex at 0.  Where the construction leaves a choice
(which triangle vertex receives the join, which neighbor receives the extra
vertex), the smallest id is used.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph


class FamilyError(ValueError):
    pass


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise FamilyError(message)


class _Builder:
    def __init__(self, n: int = 0) -> None:
        self.n = n
        self.edges: list[tuple[int, int]] = []

    def vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def edge(self, u: int, v: int) -> None:
        self.edges.append((u, v))

    def cycle(self, length: int) -> None:
        for i in range(length):
            self.edge(i, (i + 1) % length)

    def arm(self, root: int, length: int) -> list[int]:
        """Hang a path with ``length`` new vertices from ``root``."""
        out = []
        prev = root
        for _ in range(length):
            cur = self.vertex()
            self.edge(prev, cur)
            out.append(cur)
            prev = cur
        return out

    def build(self) -> Graph:
        return Graph(self.n, self.edges)


def gen_path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    b = _Builder(n)
    b.cycle(n)
    return b.build()


def gen_S(r: int, k: int) -> Graph:
    """Star ``K_{1,r}`` with each edge subdivided by ``k`` vertices; center 0."""
    _need(r >= 1 and k >= 0, "S needs r >= 1 and k >= 0")
    b = _Builder(1)
    for _ in range(r):
        b.arm(0, k + 1)
    return b.build()


def gen_G(r: int) -> Graph:
    """Triangle 0-1-2; center of ``S_{r,2}`` joined to 0; a pendant vertex on 1."""
    _need(r >= 1, "G needs r >= 1")
    b = _Builder(3)
    b.cycle(3)
    center = b.vertex()
    b.edge(0, center)
    for _ in range(r):
        b.arm(center, 3)
    b.arm(1, 1)
    return b.build()


H_CYCLE_EDGE = (2, 3)


def gen_H(r: int) -> Graph:
    """Five-cycle 0..4 with the center of ``S_{r,2}`` identified with 0.

    :data:`H_CYCLE_EDGE` is the cycle edge opposite vertex 0; it completes
    the pendant edges to a matching that covers every edge exactly once.
    """
    _need(r >= 1, "H needs r >= 1")
    b = _Builder(5)
    b.cycle(5)
    for _ in range(r):
        b.arm(0, 3)
    return b.build()


def gen_L(r: int) -> Graph:
    """Seven-cycle 0..6 with the center of ``S_{r,3}`` at 0 and a pendant vertex on 1."""
    _need(r >= 1, "L needs r >= 1")
    b = _Builder(7)
    b.cycle(7)
    for _ in range(r):
        b.arm(0, 4)
    b.arm(1, 1)
    return b.build()


def gen_Q(k: int, r: int) -> Graph:
    """Even cycle ``v1..vk`` (ids ``0..k-1``), ``S_{r,2}`` at ``v1``, a 2-path at each even ``vi``."""
    _need(k >= 4 and k % 2 == 0, "Q needs an even k >= 4")
    _need(r >= 1, "Q needs r >= 1")
    b = _Builder(k)
    b.cycle(k)
    for _ in range(r):
        b.arm(0, 3)
    for v in range(1, k, 2):
        b.arm(v, 2)
    return b.build()


REGULAR_VARIANTS = ("G", "H", "L")


def gen_regular(r: int, t: int, variant: str = "L") -> Graph:
    """Chain of ``t`` copies of ``K_{r+1}`` with two edges rerouted between copies.

    In copy ``i`` (base ``b = i(r+1)``) the removed edges are ``x y = (b, b+1)``
    and ``u v = (b+2, b+3)``; ``u_i`` joins ``x_{i+1}`` and ``v_i`` joins
    ``y_{i+1}``.  Variant ``H`` restores ``x_1 y_1`` and ``L`` additionally
    restores ``u_t v_t``, which makes the graph ``r``-regular.
    """
    _need(r >= 3, "regular chain needs r >= 3")
    _need(t >= 1, "regular chain needs t >= 1")
    _need(variant in REGULAR_VARIANTS, f"variant must be one of {REGULAR_VARIANTS}")
    size = r + 1
    edges = []
    for i in range(t):
        base = i * size
        for a in range(size):
            for c in range(a + 1, size):
                if (a, c) not in ((0, 1), (2, 3)):
                    edges.append((base + a, base + c))
        if i + 1 < t:
            nxt = base + size
            edges.append((base + 2, nxt))
            edges.append((base + 3, nxt + 1))
    if variant in ("H", "L"):
        edges.append((0, 1))
    if variant == "L":
        last = (t - 1) * size
        edges.append((last + 2, last + 3))
    return Graph(t * size, edges)


def gen_minimal_girth(g: int) -> Graph:
    """Even cycle ``0..g-1`` with a pendant 2-path at every even id.

    Attached trees alternate between a bare root and a 2-path around the cycle.
    """
    _need(g >= 10 and g % 2 == 0, "minimal girth graph needs an even g >= 10")
    b = _Builder(g)
    b.cycle(g)
    for v in range(0, g, 2):
        b.arm(v, 2)
    return b.build()


def pendant_edges(g: Graph) -> list[int]:
    """Ids of edges with an endpoint of degree one."""
    deg = g.degrees()
    return [i for i, (u, v) in enumerate(g.edges) if deg[u] == 1 or deg[v] == 1]


# Family specs ---------------------------------------------------------------

_ALIASES = {
    "path": "path", "cycle": "cycle",
    "s": "S", "star-subdivision": "S", "g": "G", "h": "H", "l": "L", "q": "Q",
    "regularg": "RegularG", "regular-g": "RegularG",
    "regularh": "RegularH", "regular-h": "RegularH",
    "regularl": "RegularL", "regular-l": "RegularL",
    "minimalgirth": "MinimalGirth", "minimal-girth": "MinimalGirth",
}

FAMILIES = ("path", "cycle", "S", "G", "H", "L", "Q", "RegularG", "RegularH", "RegularL",
            "MinimalGirth")


@dataclass(frozen=True)
class FamilySpec:
    """A family tag with its integer parameters.

    Parameters per family: path/cycle ``(n,)``; S ``(r, k)``; G, H, L ``(r,)``;
    Q ``(k, r)``; RegularG/H/L ``(r, t)``; MinimalGirth ``(g,)``.
    """

    family: str
    params: tuple[int, ...]

    @classmethod
    def parse(cls, family: str, **values: int | None) -> FamilySpec:
        tag = _ALIASES.get(family.lower())
        if tag is None:
            raise FamilyError(f"unknown family {family!r}")
        names = {
            "path": ("n",), "cycle": ("n",), "S": ("r", "k"), "G": ("r",), "H": ("r",),
            "L": ("r",), "Q": ("k", "r"), "RegularG": ("r", "t"), "RegularH": ("r", "t"),
            "RegularL": ("r", "t"), "MinimalGirth": ("g",),
        }[tag]
        missing = [n for n in names if values.get(n) is None]
        if missing:
            raise FamilyError(f"family {tag} needs --{' --'.join(missing)}")
        return cls(tag, tuple(int(values[n]) for n in names))  # type: ignore[arg-type]

    def build(self) -> Graph:
        p = self.params
        if self.family == "path":
            return gen_path(*p)
        if self.family == "cycle":
            return gen_cycle(*p)
        if self.family == "S":
            return gen_S(*p)
        if self.family == "G":
            return gen_G(*p)
        if self.family == "H":
            return gen_H(*p)
        if self.family == "L":
            return gen_L(*p)
        if self.family == "Q":
            return gen_Q(*p)
        if self.family.startswith("Regular"):
            return gen_regular(p[0], p[1], self.family[-1])
        if self.family == "MinimalGirth":
            return gen_minimal_girth(*p)
        raise FamilyError(f"unknown family {self.family!r}")

    def claimed_size(self) -> int | None:
        """Common size of the maximal induced matchings claimed for the family."""
        p = self.params
        if self.family == "S":
            return p[0] if p[1] == 2 else None
        if self.family in ("G", "H"):
            return p[0] + 1
        if self.family == "L":
            return p[0] + 2
        if self.family == "Q":
            return p[1] + p[0] // 2
        if self.family.startswith("Regular"):
            return p[1]
        if self.family == "MinimalGirth":
            return p[0] // 2
        return None
