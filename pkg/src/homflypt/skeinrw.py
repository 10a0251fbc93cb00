"""
Brute-force framed Homflypt evaluation of oriented link diagrams.

Diagrams are stored PD-style.  Every crossing lists the labels of its four
incident edges as ``(in_under, in_over, out_under, out_over)`` plus its sign;
an edge runs from the outgoing slot of one crossing to the incoming slot of
another.  Crossingless unknotted circles are counted separately in
``loops``.  The sign is stored rather than recovered from a rotation order:
only the signed Gauss data is needed by the skein-tree recursion.

Evaluation turns the diagram descending (components in a fixed order, each
traversed from a base point and met first on the over strand) by switching
crossings; each switch spawns a smoothed child through

    x^-1 L+  -  x L-  =  (s - s^-1) L0.

A descending diagram is a stack of unknots, each worth (x v^-1)^w * delta
with w its self-writhe.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .coeff import RationalFunction, X, delta, s_diff
from .hecke import BraidWord, HeckeElement, framing_factor, reduced_word

__all__ = [
    "Crossing", "PlanarDiagram", "DiagramError", "evaluate", "DiagramBuilder",
    "closure_of_braid", "remove_components", "reversed_meridian_diagram",
    "meridian_diagram", "decorated_closure_value", "parse_pd", "format_pd", "disjoint_union",
]


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class Crossing:
    in_under: int
    in_over: int
    out_under: int
    out_over: int
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DiagramError(f"crossing sign must be +-1, got {self.sign}")

    def switched(self) -> Crossing:
        return Crossing(self.in_over, self.in_under, self.out_over, self.out_under, -self.sign)

    def relabel(self, f: Callable[[int], int]) -> Crossing:
        return Crossing(f(self.in_under), f(self.in_over), f(self.out_under), f(self.out_over), self.sign)


@dataclass(frozen=True)
class PlanarDiagram:
    crossings: tuple[Crossing, ...] = ()
    loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        heads: dict[int, int] = {}
        tails: dict[int, int] = {}
        for c in self.crossings:
            for e in (c.in_under, c.in_over):
                heads[e] = heads.get(e, 0) + 1
            for e in (c.out_under, c.out_over):
                tails[e] = tails.get(e, 0) + 1
        bad = {e for e in set(heads) | set(tails) if heads.get(e) != 1 or tails.get(e) != 1}
        if bad:
            raise DiagramError(f"edges without exactly one head and one tail: {sorted(bad)}")
        if self.loops < 0:
            raise DiagramError("negative loop count")

    # -- structure --------------------------------------------------------
    def edges(self) -> list[int]:
        return sorted({c.in_under for c in self.crossings} | {c.in_over for c in self.crossings})

    def _heads(self) -> dict[int, tuple[int, str]]:
        out = {}
        for k, c in enumerate(self.crossings):
            out[c.in_under] = (k, "u")
            out[c.in_over] = (k, "o")
        return out

    def next_edge(self, e: int, heads=None) -> int:
        heads = heads or self._heads()
        k, role = heads[e]
        c = self.crossings[k]
        return c.out_under if role == "u" else c.out_over

    def components(self) -> list[tuple[int, ...]]:
        """Edge cycles in traversal order, each starting at its smallest label.

        Crossingless loops are not listed.
        """
        heads = self._heads()
        seen: set[int] = set()
        comps = []
        for e0 in sorted(heads):
            if e0 in seen:
                continue
            cyc = []
            e = e0
            while e not in seen:
                seen.add(e)
                cyc.append(e)
                e = self.next_edge(e, heads)
            comps.append(tuple(cyc))
        return comps

    def component_of(self) -> dict[int, int]:
        """Map edge -> component id (the smallest edge label on it)."""
        out = {}
        for cyc in self.components():
            for e in cyc:
                out[e] = cyc[0]
        return out

    def num_components(self) -> int:
        return len(self.components()) + self.loops

    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def self_writhes(self) -> dict[int, int]:
        comp = self.component_of()
        out = {cid: 0 for cid in set(comp.values())}
        for c in self.crossings:
            a, b = comp[c.in_under], comp[c.in_over]
            if a == b:
                out[a] += c.sign
        return out

    def mirror_orientation(self) -> PlanarDiagram:
        """Reverse every strand (same picture, arrows flipped)."""
        return PlanarDiagram(
            tuple(Crossing(c.out_under, c.out_over, c.in_under, c.in_over, c.sign) for c in self.crossings),
            self.loops,
        )


def disjoint_union(a: PlanarDiagram, b: PlanarDiagram) -> PlanarDiagram:
    shift = max(a.edges(), default=0)
    return PlanarDiagram(a.crossings + tuple(c.relabel(lambda e: e + shift) for c in b.crossings),
                         a.loops + b.loops)


# ---------------------------------------------------------------------------
# rewiring

class _UF:
    def __init__(self):
        self.parent: dict[int, int] = {}

    def find(self, a: int) -> int:
        p = self.parent
        root = a
        while p.get(root, root) != root:
            root = p[root]
        while p.get(a, a) != root:
            p[a], a = root, p[a]
        return root

    def union(self, a: int, b: int) -> bool:
        """Join the classes; return False if they were already one."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        lo, hi = min(ra, rb), max(ra, rb)
        self.parent[hi] = lo
        return True


def _rewire(d: PlanarDiagram, drop: Iterable[int], joins: Sequence[tuple[int, int]]) -> PlanarDiagram:
    """Delete crossings and splice edge ends; each join that closes a path adds a loop."""
    drop = set(drop)
    uf = _UF()
    loops = d.loops
    for a, b in joins:
        if not uf.union(a, b):
            loops += 1
    kept = tuple(c.relabel(uf.find) for k, c in enumerate(d.crossings) if k not in drop)
    return PlanarDiagram(kept, loops)


def smooth(d: PlanarDiagram, k: int) -> PlanarDiagram:
    """Oriented smoothing of crossing k."""
    c = d.crossings[k]
    return _rewire(d, [k], [(c.in_under, c.out_over), (c.in_over, c.out_under)])


def switch(d: PlanarDiagram, k: int) -> PlanarDiagram:
    cs = list(d.crossings)
    cs[k] = cs[k].switched()
    return PlanarDiagram(tuple(cs), d.loops)


def remove_components(d: PlanarDiagram, comp_ids: Iterable[int]) -> PlanarDiagram:
    """Delete whole components (given by component id)."""
    comp = d.component_of()
    gone = set(comp_ids)
    unknown = gone - set(comp.values())
    if unknown:
        raise DiagramError(f"no such components: {sorted(unknown)}")
    drop, joins = [], []
    for k, c in enumerate(d.crossings):
        under_gone = comp[c.in_under] in gone
        over_gone = comp[c.in_over] in gone
        if under_gone or over_gone:
            drop.append(k)
            if not under_gone:
                joins.append((c.in_under, c.out_under))
            if not over_gone:
                joins.append((c.in_over, c.out_over))
    return _rewire(d, drop, joins)


# ---------------------------------------------------------------------------
# evaluation

def _order(d: PlanarDiagram, policy: str) -> list[tuple[int, ...]]:
    comps = d.components()
    if policy == "first":
        return comps
    if policy == "last":
        # reversed component order, base point at the largest label
        out = []
        for cyc in reversed(comps):
            i = cyc.index(max(cyc))
            out.append(cyc[i:] + cyc[:i])
        return out
    raise ValueError(f"unknown policy {policy!r}")


def _first_bad(d: PlanarDiagram, policy: str) -> int | None:
    heads = d._heads()
    seen: set[int] = set()
    for cyc in _order(d, policy):
        for e in cyc:
            k, role = heads[e]
            if k in seen:
                continue
            seen.add(k)
            if role == "u":
                return k
    return None


def _key(d: PlanarDiagram):
    return (tuple(sorted((c.in_under, c.in_over, c.out_under, c.out_over, c.sign) for c in d.crossings)), d.loops)


def evaluate(d: PlanarDiagram, policy: str = "first") -> RationalFunction:
    """Framed Homflypt value of d, with the empty diagram worth 1.

    ``policy`` picks the component order and base points ("first" or
    "last"); the value does not depend on it.
    """
    dl = delta()
    z = RationalFunction.coerce(framing_factor())
    x2 = RationalFunction.coerce(X * X)
    xq = RationalFunction.coerce(X * s_diff())
    x_2 = RationalFunction.coerce(X ** -2)
    x_q = RationalFunction.coerce(X ** -1 * s_diff())
    memo: dict = {}

    def rec(d: PlanarDiagram) -> RationalFunction:
        key = _key(d)
        got = memo.get(key)
        if got is not None:
            return got
        k = _first_bad(d, policy) if d.crossings else None
        if k is None:
            val = dl ** d.loops
            for w in d.self_writhes().values():
                val = val * dl * z ** w
        else:
            sw, sm = rec(switch(d, k)), rec(smooth(d, k))
            if d.crossings[k].sign > 0:
                val = x2 * sw + xq * sm
            else:
                val = x_2 * sw - x_q * sm
        memo[key] = val
        return val

    return rec(d)


# ---------------------------------------------------------------------------
# construction

class DiagramBuilder:
    """Build diagrams bottom to top as a Morse sequence.

    The state is a row of open strand positions, each carrying an edge label
    and a direction (+1 up, -1 down).  Events: ``cup`` opens two positions,
    ``cap`` closes two, ``cross`` swaps two neighbours with a chosen over
    strand, ``ring`` threads a new unknotted circle around a block of
    positions (lower arc over the strands, upper arc under them).
    """

    def __init__(self):
        self.pos: list[list[int]] = []  # [edge, direction]
        self.crossings: list[Crossing] = []
        self.joins: list[tuple[int, int]] = []
        self._next = 1
        self.rings: list[int] = []

    def _edge(self) -> int:
        e = self._next
        self._next += 1
        return e

    def cup(self, i: int, left_up: bool = True) -> DiagramBuilder:
        e = self._edge()
        a, b = (1, -1) if left_up else (-1, 1)
        self.pos[i:i] = [[e, a], [e, b]]
        return self

    def cap(self, i: int) -> DiagramBuilder:
        (e1, d1), (e2, d2) = self.pos[i], self.pos[i + 1]
        if d1 == d2:
            raise DiagramError(f"cap at {i} joins strands with the same direction")
        self.joins.append((e1, e2))
        del self.pos[i:i + 2]
        return self

    def cross(self, i: int, over: str = "left") -> DiagramBuilder:
        """Swap positions i, i+1; ``over`` names the strand that starts on that side."""
        (el, dl), (er, dr) = self.pos[i], self.pos[i + 1]
        nl, nr = self._edge(), self._edge()
        # direction vectors of the left strand (bottom i -> top i+1) and the right one
        vl = (dl, dl)
        vr = (-dr, dr)
        ov, un = (vl, vr) if over == "left" else (vr, vl)
        cr = ov[0] * un[1] - ov[1] * un[0]
        sign = 1 if cr > 0 else -1
        # incoming/outgoing edge of each strand
        l_in, l_out = (el, nl) if dl > 0 else (nl, el)
        r_in, r_out = (er, nr) if dr > 0 else (nr, er)
        if over == "left":
            c = Crossing(r_in, l_in, r_out, l_out, sign)
        else:
            c = Crossing(l_in, r_in, l_out, r_out, sign)
        self.crossings.append(c)
        self.pos[i], self.pos[i + 1] = [nr, dr], [nl, dl]
        return self

    def sigma(self, i: int, power: int = 1) -> DiagramBuilder:
        """Braid generator on positions i, i+1 (0-based); positive when both strands point up."""
        self.cross(i, "left" if power > 0 else "right")
        return self

    def ring(self, i: int, j: int, ccw: bool = True) -> int:
        """Circle around positions i..j; returns the id of its first edge."""
        block = range(i, j + 1)
        m = len(block)
        ring_edges = [self._edge() for _ in range(2 * m)]
        lower, upper = {}, {}
        for k in block:
            e, d = self.pos[k]
            mid, top = self._edge(), self._edge()
            if d > 0:
                lower[k] = (e, mid)  # strand (in, out) at the lower crossing
                upper[k] = (mid, top)
            else:
                upper[k] = (top, mid)
                lower[k] = (mid, e)
            self.pos[k] = [top, d]
        if ccw:
            order = [("lo", k) for k in block] + [("up", k) for k in reversed(block)]
        else:
            order = [("lo", k) for k in reversed(block)] + [("up", k) for k in block]
        for t, (arc, k) in enumerate(order):
            r_in, r_out = ring_edges[t], ring_edges[(t + 1) % (2 * m)]
            d = self.pos[k][1]
            sign = d if ccw else -d
            if arc == "lo":
                s_in, s_out = lower[k]
                self.crossings.append(Crossing(s_in, r_in, s_out, r_out, sign))
            else:
                s_in, s_out = upper[k]
                self.crossings.append(Crossing(r_in, s_in, r_out, s_out, sign))
        self.rings.append(ring_edges[0])
        return ring_edges[0]

    def kink(self, i: int, sign: int = 1) -> DiagramBuilder:
        """Reidemeister-I curl on the strand at position i."""
        d = self.pos[i][1]
        self.cup(i + 1, left_up=(d > 0))
        # the curl crossing involves two parallel strands
        self.cross(i, "left" if sign > 0 else "right")
        self.cap(i + 1)
        return self

    def finish(self) -> tuple[PlanarDiagram, list[int]]:
        """Return the diagram and the component ids of the rings."""
        if self.pos:
            raise DiagramError(f"{len(self.pos)} open strand ends remain")
        uf = _UF()
        loops = 0
        for a, b in self.joins:
            if not uf.union(a, b):
                loops += 1
        cs = [c.relabel(uf.find) for c in self.crossings]
        # relabel edges 1..E in order of first appearance
        labels: dict[int, int] = {}
        for c in cs:
            for e in (c.in_under, c.in_over, c.out_under, c.out_over):
                labels.setdefault(e, len(labels) + 1)
        d = PlanarDiagram(tuple(c.relabel(labels.__getitem__) for c in cs), loops)
        comp = d.component_of()
        ring_ids = [comp[labels[uf.find(r)]] for r in self.rings]
        return d, ring_ids


def closure_of_braid(w: BraidWord) -> PlanarDiagram:
    """Standard closure: braid on the left, return strands nested on the right."""
    b = DiagramBuilder()
    _open_closure(b, w.n)
    for a in w.letters:
        b.sigma(abs(a) - 1, 1 if a > 0 else -1)
    _close_closure(b, w.n)
    return b.finish()[0]


def _open_closure(b: DiagramBuilder, n: int):
    for k in range(n):
        b.cup(k, left_up=True)


def _close_closure(b: DiagramBuilder, n: int):
    for k in range(n - 1, -1, -1):
        b.cap(k)


def meridian_diagram(word: Sequence[int], n: int, ccw: bool = True) -> tuple[PlanarDiagram, int]:
    """Closure of an n-strand braid word with a circle around all n strands.

    ``ccw=True`` gives the circle the orientation that links each upward
    strand positively (same orientation as the strands); ``ccw=False``
    gives the reversed circle.
    """
    b = DiagramBuilder()
    _open_closure(b, n)
    for a in word:
        b.sigma(abs(a) - 1, 1 if a > 0 else -1)
    b.ring(0, n - 1, ccw=ccw)
    _close_closure(b, n)
    d, rings = b.finish()
    return d, rings[0]


def reversed_meridian_diagram(word: Sequence[int], n: int) -> PlanarDiagram:
    """Braid closure of ``word`` with an oppositely oriented circle around all strands."""
    return meridian_diagram(word, n, ccw=False)[0]


def decorated_closure_value(h: HeckeElement, ring: str | None = None, policy: str = "first") -> RationalFunction:
    """Closure of a Hecke element, optionally with a circle around all strands.

    The element is expanded in positive permutation braids and each term is
    drawn and evaluated separately.  ``ring`` is None, "same" or "reversed".
    """
    if ring not in (None, "same", "reversed"):
        raise ValueError(f"ring must be None, 'same' or 'reversed', got {ring!r}")
    total = RationalFunction.coerce(0)
    for p, c in h.items():
        word = reduced_word(p)
        if ring is None:
            d = closure_of_braid(BraidWord(h.n, word))
        else:
            d = meridian_diagram(word, h.n, ccw=(ring == "same"))[0]
        total = total + c * evaluate(d, policy)
    return total


# ---------------------------------------------------------------------------
# text format

def format_pd(d: PlanarDiagram, dotted: Sequence[int] = ()) -> str:
    lines = []
    for c in d.crossings:
        lines.append(f"X {c.in_under} {c.in_over} {c.out_under} {c.out_over} {'+' if c.sign > 0 else '-'}")
    lines.extend("O" for _ in range(d.loops))
    if dotted:
        lines.append("dotted: " + " ".join(map(str, dotted)))
    return "\n".join(lines) + "\n"


def parse_pd(text: str) -> tuple[PlanarDiagram, list[int]]:
    """Parse the PD text format; returns the diagram and dotted component ids.

    One crossing per line, ``X in_under in_over out_under out_over +|-``;
    ``O`` for a crossingless circle; ``dotted: <ids>``; ``#`` comments.
    """
    crossings, loops, dotted = [], 0, []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("dotted:"):
            dotted.extend(int(t) for t in line[len("dotted:"):].split())
            continue
        toks = line.split()
        if toks == ["O"]:
            loops += 1
            continue
        if toks[0] != "X" or len(toks) != 6 or toks[5] not in "+-" or len(toks[5]) != 1:
            raise DiagramError(f"line {lineno}: cannot parse {raw!r}")
        try:
            a, b, c, e = (int(t) for t in toks[1:5])
        except ValueError as exc:
            raise DiagramError(f"line {lineno}: {exc}") from None
        crossings.append(Crossing(a, b, c, e, 1 if toks[5] == "+" else -1))
    d = PlanarDiagram(tuple(crossings), loops)
    comp_ids = set(d.component_of().values())
    for cid in dotted:
        if cid not in comp_ids:
            raise DiagramError(f"dotted id {cid} is not a component id (smallest edge label)")
    return d, dotted
