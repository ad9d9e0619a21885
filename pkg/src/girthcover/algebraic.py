"""Algebraically defined bipartite graphs over F_q and their shifted copies.

Two constructions, both q-regular bipartite with coordinate-tuple vertices:

* the quadrangle graph on 2q^3 vertices (girth 8): point (p1,p2,p3) is
  adjacent to line (l1,l2,l3) iff

      l2 - (p2 + a2) = l1*p1
      l3 - 2*(p3 + a3) = -2*l1*(p2 + a2)

* the hexagon graph on 2q^5 vertices (girth 12): point (p1..p5) is adjacent
  to line (l1..l5) iff

      l2 - (p2 + b2) = l1*p1
      l3 - 2*(p3 + b3) = -2*l1*(p2 + b2)
      l4 - 3*(p4 + b4) = -3*l1*(p3 + b3)
      2*l5 - 3*(p5 + b5) = 3*l3*(p2 + b2) - 3*l2*(p3 + b3) + l4*p1

with all arithmetic mod q.  The shift (a2, a3) resp. (b2..b5) selects one
member of a family of pairwise edge-disjoint copies whose union is the
complete bipartite graph on the two coordinate spaces: for any point/line
pair the triangular system above has a unique shift solution.

Sign conventions are kept exactly as written; re-normalizing the equations
would silently change the graph.  Adjacency is generated per point via the
free parameter l1 (q neighbors each), never by testing all pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .field import is_prime
from .graph import Graph


@dataclass(frozen=True)
class ShiftQ:
    a2: int = 0
    a3: int = 0

    def reduced(self, q: int) -> "ShiftQ":
        return ShiftQ(self.a2 % q, self.a3 % q)

    def as_tuple(self) -> tuple[int, int]:
        return (self.a2, self.a3)


@dataclass(frozen=True)
class ShiftH:
    b2: int = 0
    b3: int = 0
    b4: int = 0
    b5: int = 0

    def reduced(self, q: int) -> "ShiftH":
        return ShiftH(self.b2 % q, self.b3 % q, self.b4 % q, self.b5 % q)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.b2, self.b3, self.b4, self.b5)


Shift = Union[ShiftQ, ShiftH]


def _check_q(q: int) -> None:
    if q < 5 or not is_prime(q):
        raise ValueError(f"q must be a prime >= 5, got {q}")


def tuple_to_index(coords: tuple[int, ...], q: int) -> int:
    """Canonical mixed-radix (big-endian base q) index of a coordinate tuple."""
    idx = 0
    for c in coords:
        if not 0 <= c < q:
            raise ValueError(f"coordinate {c} outside F_{q}")
        idx = idx * q + c
    return idx

def index_to_tuple(idx: int, q: int, arity: int) -> tuple[int, ...]:
    coords = []
    for _ in range(arity):
        coords.append(idx % q)
        idx //= q
    return tuple(reversed(coords))


@dataclass(frozen=True)
class PointLineGraph:
    """A quadrangle or hexagon graph together with its construction data.

    Vertices 0..q^arity-1 are points (index = mixed-radix tuple), vertices
    q^arity..2q^arity-1 are lines.
    """

    q: int
    arity: int  # 3 for the quadrangle, 5 for the hexagon
    shift: Shift
    graph: Graph

    @property
    def n_side(self) -> int:
        return self.q ** self.arity

    def point_id(self, coords: tuple[int, ...]) -> int:
        return tuple_to_index(coords, self.q)

    def line_id(self, coords: tuple[int, ...]) -> int:
        return self.n_side + tuple_to_index(coords, self.q)

    def point_coords(self, vid: int) -> tuple[int, ...]:
        return index_to_tuple(vid, self.q, self.arity)

    def line_coords(self, vid: int) -> tuple[int, ...]:
        return index_to_tuple(vid - self.n_side, self.q, self.arity)

    def vertex_label(self, vid: int) -> str:
        if vid < self.n_side:
            return "P:" + ",".join(map(str, self.point_coords(vid)))
        return "L:" + ",".join(map(str, self.line_coords(vid)))


def quadrangle_neighbor(p: tuple[int, int, int], l1: int, shift: ShiftQ, q: int):
    """The unique line through point p with first coordinate l1."""
    p1, p2, p3 = p
    s2 = (p2 + shift.a2) % q
    s3 = (p3 + shift.a3) % q
    l2 = (s2 + l1 * p1) % q
    l3 = (2 * s3 - 2 * l1 * s2) % q
    return (l1, l2, l3)


def hexagon_neighbor(p: tuple[int, ...], l1: int, shift: ShiftH, q: int):
    """The unique line through point p with first coordinate l1.

    The system is triangular in l2, l3, l4; l5 needs the inverse of 2.
    """
    p1, p2, p3, p4, p5 = p
    s2 = (p2 + shift.b2) % q
    s3 = (p3 + shift.b3) % q
    s4 = (p4 + shift.b4) % q
    s5 = (p5 + shift.b5) % q
    l2 = (s2 + l1 * p1) % q
    l3 = (2 * s3 - 2 * l1 * s2) % q
    l4 = (3 * s4 - 3 * l1 * s3) % q
    inv2 = pow(2, -1, q)
    l5 = (inv2 * (3 * s5 + 3 * l3 * s2 - 3 * l2 * s3 + l4 * p1)) % q
    return (l1, l2, l3, l4, l5)


def is_edge_q(p: tuple[int, int, int], l: tuple[int, int, int], shift: ShiftQ, q: int) -> bool:
    p1, p2, p3 = p
    l1, l2, l3 = l
    s2 = (p2 + shift.a2) % q
    s3 = (p3 + shift.a3) % q
    return (l2 - s2 - l1 * p1) % q == 0 and (l3 - 2 * s3 + 2 * l1 * s2) % q == 0


def is_edge_h(p: tuple[int, ...], l: tuple[int, ...], shift: ShiftH, q: int) -> bool:
    p1, p2, p3, p4, p5 = p
    l1, l2, l3, l4, l5 = l
    s2 = (p2 + shift.b2) % q
    s3 = (p3 + shift.b3) % q
    s4 = (p4 + shift.b4) % q
    s5 = (p5 + shift.b5) % q
    return (
        (l2 - s2 - l1 * p1) % q == 0
        and (l3 - 2 * s3 + 2 * l1 * s2) % q == 0
        and (l4 - 3 * s4 + 3 * l1 * s3) % q == 0
        and (2 * l5 - 3 * s5 - 3 * l3 * s2 + 3 * l2 * s3 - l4 * p1) % q == 0
    )


def _build(q: int, arity: int, shift: Shift, with_labels: bool) -> PointLineGraph:
    n_side = q**arity
    edges = []
    neighbor = quadrangle_neighbor if arity == 3 else hexagon_neighbor
    for pid in range(n_side):
        p = index_to_tuple(pid, q, arity)
        for l1 in range(q):
            l = neighbor(p, l1, shift, q)
            edges.append((pid, n_side + tuple_to_index(l, q)))
    side = [0] * n_side + [1] * n_side
    labels = None
    if with_labels:
        labels = ["P:" + ",".join(map(str, index_to_tuple(i, q, arity))) for i in range(n_side)]
        labels += ["L:" + ",".join(map(str, index_to_tuple(i, q, arity))) for i in range(n_side)]
    g = Graph(2 * n_side, edges, labels=labels, side=side)
    return PointLineGraph(q=q, arity=arity, shift=shift, graph=g)


def build_quadrangle(q: int, shift: Optional[ShiftQ] = None, with_labels: bool = False) -> PointLineGraph:
    """The (shifted) quadrangle graph: 2q^3 vertices, q-regular, girth 8."""
    _check_q(q)
    shift = (shift or ShiftQ()).reduced(q)
    return _build(q, 3, shift, with_labels)


def build_hexagon(q: int, shift: Optional[ShiftH] = None, with_labels: bool = False) -> PointLineGraph:
    """The (shifted) hexagon graph: 2q^5 vertices, q-regular, girth 12."""
    _check_q(q)
    shift = (shift or ShiftH()).reduced(q)
    return _build(q, 5, shift, with_labels)


# ---------------------------------------------------------------------------
# Shift isomorphisms: every shifted copy is isomorphic to the zero-shift
# graph.  Subtracting the shift from the point coordinates (lines fixed)
# maps the BASE graph onto the shifted copy: substituting p2 - a2 into the
# shifted first equation gives back l2 - p2 = l1*p1, and likewise down the
# system.  The inverse (shifted -> base) adds the shift instead.


def _check_label(v_label, arity: int):
    if (
        not isinstance(v_label, tuple)
        or len(v_label) != 2
        or v_label[0] not in ("P", "L")
        or not isinstance(v_label[1], tuple)
        or len(v_label[1]) != arity
    ):
        raise ValueError(f"malformed vertex label {v_label!r}; expected ('P'|'L', {arity}-tuple)")


def shift_isomorphism_q(v_label, shift: ShiftQ, q: int):
    """Map a labeled vertex of the base quadrangle into the shifted copy.

    Points (p1,p2,p3) -> (p1, p2-a2, p3-a3); lines map identically.
    Applying this to the base edge set yields exactly the shifted edge set.
    """
    _check_label(v_label, 3)
    cls, coords = v_label
    if cls == "L":
        return v_label
    p1, p2, p3 = coords
    return ("P", (p1 % q, (p2 - shift.a2) % q, (p3 - shift.a3) % q))


def shift_isomorphism_h(v_label, shift: ShiftH, q: int):
    """As :func:`shift_isomorphism_q` (base -> shifted), with four shifts."""
    _check_label(v_label, 5)
    cls, coords = v_label
    if cls == "L":
        return v_label
    p1, p2, p3, p4, p5 = coords
    return (
        "P",
        (
            p1 % q,
            (p2 - shift.b2) % q,
            (p3 - shift.b3) % q,
            (p4 - shift.b4) % q,
            (p5 - shift.b5) % q,
        ),
    )


# ---------------------------------------------------------------------------
# Unique-shift solvers: for any fixed point/line pair the shifted adjacency
# system is triangular in the shift, hence has exactly one solution.


def solve_shift_q(p: tuple[int, int, int], l: tuple[int, int, int], q: int) -> ShiftQ:
    """The unique shift (a2, a3) making p and l adjacent in the shifted copy."""
    _check_q(q)
    p1, p2, p3 = p
    l1, l2, l3 = l
    a2 = (l2 - p2 - l1 * p1) % q
    inv2 = pow(2, -1, q)
    a3 = (inv2 * (l3 + 2 * l1 * ((p2 + a2) % q)) - p3) % q
    shift = ShiftQ(a2, a3)
    assert is_edge_q(p, l, shift, q)
    return shift


def solve_shift_h(p: tuple[int, ...], l: tuple[int, ...], q: int) -> ShiftH:
    """The unique shift (b2..b5) making p and l adjacent in the shifted copy."""
    _check_q(q)
    p1, p2, p3, p4, p5 = p
    l1, l2, l3, l4, l5 = l
    inv2 = pow(2, -1, q)
    inv3 = pow(3, -1, q)
    b2 = (l2 - p2 - l1 * p1) % q
    s2 = (p2 + b2) % q
    b3 = (inv2 * (l3 + 2 * l1 * s2) - p3) % q
    s3 = (p3 + b3) % q
    b4 = (inv3 * (l4 + 3 * l1 * s3) - p4) % q
    b5 = (inv3 * (2 * l5 - 3 * l3 * s2 + 3 * l2 * s3 - l4 * p1) - p5) % q
    shift = ShiftH(b2, b3, b4, b5)
    assert is_edge_h(p, l, shift, q)
    return shift
