"""Exact geometric predicates over rational points."""

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from numbers import Rational


@dataclass(frozen=True, order=True)
class Point:
    """A point with exact rational coordinates.

    Coordinates are stored as :class:`fractions.Fraction`, which keeps them in
    lowest terms with a positive denominator.
    """

    x: Fraction
    y: Fraction

    def __init__(self, x: Rational | int | str, y: Rational | int | str):
        object.__setattr__(self, "x", Fraction(x))
        object.__setattr__(self, "y", Fraction(y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def scale(self, factor: Rational | int) -> "Point":
        return Point(self.x * factor, self.y * factor)

    def to_list(self) -> list[int]:
        """Serialize as ``[xn, xd, yn, yd]``."""
        return [self.x.numerator, self.x.denominator, self.y.numerator, self.y.denominator]

    @classmethod
    def from_list(cls, values: list[int]) -> "Point":
        xn, xd, yn, yd = values
        return cls(Fraction(xn, xd), Fraction(yn, yd))

    def __repr__(self) -> str:
        return f"Point({self.x}, {self.y})"


Segment = tuple[Point, Point]


def cross(o: Point, a: Point, b: Point) -> Fraction:
    """Cross product (a - o) x (b - o)."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def orient(p: Point, q: Point, r: Point) -> int:
    """Sign of (q - p) x (r - p): +1 counterclockwise, -1 clockwise, 0 collinear."""
    value = cross(p, q, r)
    return (value > 0) - (value < 0)


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """True iff p lies on the closed segment ab."""
    if orient(a, b, p) != 0:
        return False
    return min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y)


def in_segment_interior(p: Point, a: Point, b: Point) -> bool:
    """True iff p lies on segment ab and is neither endpoint."""
    return p != a and p != b and on_segment(p, a, b)


def segments_intersect(a: Segment, b: Segment) -> bool:
    """True iff the closed segments share at least one point."""
    p1, p2 = a
    q1, q2 = b
    o1, o2 = orient(p1, p2, q1), orient(p1, p2, q2)
    o3, o4 = orient(q1, q2, p1), orient(q1, q2, p2)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    return (
        (o1 == 0 and on_segment(q1, p1, p2))
        or (o2 == 0 and on_segment(q2, p1, p2))
        or (o3 == 0 and on_segment(p1, q1, q2))
        or (o4 == 0 and on_segment(p2, q1, q2))
    )


def segments_cross(a: Segment, b: Segment) -> bool:
    """True iff the closed segments meet at a point that is not a shared endpoint.

    Two segments sharing exactly one endpoint and otherwise disjoint do not
    cross. Overlapping collinear segments always cross.
    """
    shared = {a[0], a[1]} & {b[0], b[1]}
    if not shared:
        return segments_intersect(a, b)
    if len(shared) == 2:
        return True
    (s,) = shared
    u = a[1] if a[0] == s else a[0]
    w = b[1] if b[0] == s else b[0]
    # Segments from a common endpoint meet elsewhere only when they overlap.
    if orient(s, u, w) != 0:
        return False
    return (u.x - s.x) * (w.x - s.x) + (u.y - s.y) * (w.y - s.y) > 0


def _half(d: Point) -> int:
    """0 for directions with angle in [0, pi), 1 for [pi, 2 pi)."""
    return 0 if d.y > 0 or (d.y == 0 and d.x > 0) else 1


def compare_directions(d1: Point, d2: Point) -> int:
    """Compare two nonzero direction vectors by polar angle in [0, 2 pi)."""
    h1, h2 = _half(d1), _half(d2)
    if h1 != h2:
        return h1 - h2
    value = d1.x * d2.y - d1.y * d2.x
    return (value < 0) - (value > 0)


def angular_order(origin: Point, points: dict[int, Point]) -> list[int]:
    """Keys of ``points`` sorted counterclockwise by angle around ``origin``.

    The order starts at the direction of angle 0 (positive x-axis).
    """
    key = cmp_to_key(lambda a, b: compare_directions(points[a] - origin, points[b] - origin))
    return sorted(points, key=key)


def ray_crossings(p: Point, a: Point, b: Point) -> int:
    """1 if the rightward horizontal ray from p crosses segment ab, else 0.

    Half-open rule on y so that a polygonal walk through a vertex at the
    ray's height is counted once.
    """
    if (a.y > p.y) == (b.y > p.y):
        return 0
    x_at = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y)
    return 1 if x_at > p.x else 0


def point_in_walk(p: Point, walk: list[Point]) -> bool:
    """Crossing-parity test of p against a closed polygonal walk.

    Edges traversed twice cancel out, so a walk around a tree encloses nothing.
    ``p`` must not lie on the walk.
    """
    count = 0
    for i, a in enumerate(walk):
        count += ray_crossings(p, a, walk[(i + 1) % len(walk)])
    return count % 2 == 1
