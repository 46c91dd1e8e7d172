"""Maya diagrams, charged partitions, and residue-colored box combinatorics.

A Maya diagram is an infinite two-coloring of integer slots with fixed
asymptotics.  A *left-black* diagram is black at all sufficiently positive
slots and white at all sufficiently negative slots; *right-black* is the
mirror image.  Slot labels increase toward the black end of a left-black
diagram.

Only the finite deviation from the kind's charge-zero vacuum is stored
(left-black vacuum: black exactly at labels >= 1), so equality and hashing
are O(#deviations).  Charged partitions are the equivalent finite picture:
a partition plus an integer charge, with each box carrying the slot label

    label(row, col) = (1 - charge) + col - row

pinned so that the standard 12-box example diagram produces the label
multiset {2,1,0,0,-1,-1,-1,-2,-2,-3,-4,-5}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

BLACK = "black"
WHITE = "white"
LEFT_BLACK = "left-black"
RIGHT_BLACK = "right-black"


@dataclass(frozen=True)
class Interval:
    """Inclusive integer interval of slot labels."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty interval: lo=%d > hi=%d" % (self.lo, self.hi))

    def __contains__(self, label):
        return self.lo <= label <= self.hi


class MayaDiagram:
    """Canonical Maya diagram: kind plus the labels deviating from the vacuum.

    ``diffs`` is the frozenset of slot labels whose color differs from the
    kind's charge-zero vacuum.  Immutable and hashable.
    """

    __slots__ = ("kind", "diffs", "_hash")

    def __init__(self, kind, diffs=frozenset()):
        if kind not in (LEFT_BLACK, RIGHT_BLACK):
            raise ValueError("unknown kind: %r" % (kind,))
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "diffs", frozenset(diffs))
        object.__setattr__(self, "_hash", hash((kind, self.diffs)))

    def __setattr__(self, name, value):
        raise AttributeError("MayaDiagram is immutable")

    def __eq__(self, other):
        if not isinstance(other, MayaDiagram):
            return NotImplemented
        return self.kind == other.kind and self.diffs == other.diffs

    def __hash__(self):
        return self._hash

    def vacuum_color(self, label):
        if self.kind == LEFT_BLACK:
            return BLACK if label >= 1 else WHITE
        return BLACK if label <= 0 else WHITE

    def color(self, label):
        base = self.vacuum_color(label)
        if label in self.diffs:
            return WHITE if base == BLACK else BLACK
        return base

    @classmethod
    def from_colors(cls, kind, overrides):
        """Build from explicit slot colors; redundant overrides are dropped."""
        probe = cls(kind)
        diffs = {
            label for label, color in dict(overrides).items()
            if color != probe.vacuum_color(label)
        }
        return cls(kind, diffs)

    @property
    def charge(self):
        below = sum(1 for d in self.diffs if d <= 0)
        above = len(self.diffs) - below
        return below - above

    def invert(self):
        """Swap all colors; exchanges left-black and right-black."""
        other = RIGHT_BLACK if self.kind == LEFT_BLACK else LEFT_BLACK
        return MayaDiagram(other, self.diffs)

    def shift(self, k):
        """Translate every slot label by k (the sigma shift for k = n)."""
        if k == 0:
            return self
        window = range(1, k + 1) if k > 0 else range(k + 1, 1)
        diffs = {d + k for d in self.diffs}
        diffs.symmetric_difference_update(window)
        return MayaDiagram(self.kind, diffs)

    def support_interval(self):
        """Smallest interval containing all deviations (degenerate if vacuum)."""
        if not self.diffs:
            return Interval(0, 0)
        return Interval(min(self.diffs), max(self.diffs))

    def to_json(self):
        return {
            "kind": self.kind,
            "deviations": [[d, self.color(d)] for d in sorted(self.diffs)],
        }

    @classmethod
    def from_json(cls, data):
        kind = data["kind"]
        overrides = {int(label): color for label, color in data["deviations"]}
        for color in overrides.values():
            if color not in (BLACK, WHITE):
                raise ValueError("bad bead color: %r" % (color,))
        return cls.from_colors(kind, overrides)

    def __repr__(self):
        return "MayaDiagram(%r, %r)" % (self.kind, sorted(self.diffs))


DOWNWARD = "downward"
UPWARD = "upward"


@dataclass(frozen=True)
class ChargedPartition:
    """Weakly decreasing positive parts, an integer charge, and an orientation.

    Downward partitions pair with left-black Maya diagrams, upward with
    right-black; the pairing swaps colors bead-for-bead.
    """

    parts: tuple
    charge: int = 0
    orientation: str = DOWNWARD

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p <= 0 for p in parts):
            raise ValueError("parts must be positive: %r" % (parts,))
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("parts must be weakly decreasing: %r" % (parts,))
        if self.orientation not in (DOWNWARD, UPWARD):
            raise ValueError("unknown orientation: %r" % (self.orientation,))

    @property
    def size(self):
        return sum(self.parts)

    def to_json(self):
        return {
            "parts": list(self.parts),
            "charge": self.charge,
            "orientation": self.orientation,
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            tuple(int(p) for p in data["parts"]),
            int(data["charge"]),
            data.get("orientation", DOWNWARD),
        )


@dataclass(frozen=True)
class BoxRef:
    """A box position inside (or just outside) a partition, with its slot data."""

    row: int
    col: int
    slot_label: int
    residue: int


def _slot_offset(charge):
    return 1 - charge


def box_slot_label(p, row, col):
    """Slot label of box (row, col); the box must lie inside the partition."""
    if not (1 <= row <= len(p.parts) and 1 <= col <= p.parts[row - 1]):
        raise ValueError("box (%d, %d) outside partition %r" % (row, col, p.parts))
    return _slot_offset(p.charge) + col - row


def from_partition(p):
    """Charged partition -> canonical Maya diagram (inverse of to_partition)."""
    if p.orientation == UPWARD:
        down = ChargedPartition(p.parts, p.charge, DOWNWARD)
        return from_partition(down).invert()
    s = _slot_offset(p.charge)
    k = len(p.parts)
    whites = {p.parts[j] + s - (j + 1) for j in range(k)}
    tail_max = s - k - 1  # every label <= tail_max is white
    lo = min([tail_max, 0] + [w for w in whites])
    hi = max([0, tail_max] + [w for w in whites])
    overrides = {}
    for label in range(lo, hi + 1):
        overrides[label] = WHITE if (label in whites or label <= tail_max) else BLACK
    return MayaDiagram.from_colors(LEFT_BLACK, overrides)


def to_partition(m):
    """Canonical Maya diagram -> charged partition."""
    if m.kind == RIGHT_BLACK:
        down = to_partition(m.invert())
        return ChargedPartition(down.parts, down.charge, UPWARD)
    hi = max([0] + [d for d in m.diffs])
    lo = min([1] + [d for d in m.diffs]) - 1  # every label <= lo is white
    whites = [label for label in range(hi, lo, -1) if m.color(label) == WHITE]
    k = len(whites)
    s = lo + k + 1
    parts = tuple(w - s + j for j, w in enumerate(whites, 1))
    parts = parts[: next((j for j, x in enumerate(parts) if x == 0), len(parts))]
    return ChargedPartition(parts, 1 - s, DOWNWARD)


def box_label_multiset(p):
    """Sorted list of the slot labels of every box of the partition."""
    labels = []
    for row, length in enumerate(p.parts, 1):
        for col in range(1, length + 1):
            labels.append(box_slot_label(p, row, col))
    return sorted(labels)


def removable_boxes(p, i, n):
    """Corner boxes whose slot label is congruent to i mod n.

    Corners of a partition sit on distinct diagonals, so removable boxes of
    a fixed residue carry pairwise distinct labels differing by multiples
    of n, and any subset of them can be deleted simultaneously.
    """
    i = i % n
    boxes = []
    parts = p.parts
    for row in range(1, len(parts) + 1):
        if row == len(parts) or parts[row - 1] > parts[row]:
            col = parts[row - 1]
            label = _slot_offset(p.charge) + col - row
            if label % n == i:
                boxes.append(BoxRef(row, col, label, label % n))
    return boxes


def addable_boxes(p, i, n):
    """Corner extensions whose slot label is congruent to i mod n."""
    i = i % n
    boxes = []
    parts = p.parts
    for row in range(1, len(parts) + 2):
        col = (parts[row - 1] if row <= len(parts) else 0) + 1
        prev = parts[row - 2] if row >= 2 else None
        if prev is not None and col > prev:
            continue
        label = _slot_offset(p.charge) + col - row
        if label % n == i:
            boxes.append(BoxRef(row, col, label, label % n))
    return boxes


def remove_box(p, box):
    parts = list(p.parts)
    if parts[box.row - 1] != box.col:
        raise ValueError("box %r is not a corner of %r" % (box, p.parts))
    parts[box.row - 1] -= 1
    while parts and parts[-1] == 0:
        parts.pop()
    return ChargedPartition(tuple(parts), p.charge, p.orientation)


def add_box(p, box):
    parts = list(p.parts)
    if box.row == len(parts) + 1:
        parts.append(0)
    if parts[box.row - 1] + 1 != box.col:
        raise ValueError("box %r is not addable to %r" % (box, p.parts))
    parts[box.row - 1] += 1
    return ChargedPartition(tuple(parts), p.charge, p.orientation)


def removal_subsets(p, i, n):
    """All partitions obtained by deleting any subset of removable i-boxes.

    Always includes p itself (the empty subset); the order is by subset
    bitmask over the removable boxes listed top row first.
    """
    boxes = removable_boxes(p, i, n)
    results = []
    for mask in range(1 << len(boxes)):
        q = p
        for j, box in enumerate(boxes):
            if mask >> j & 1:
                q = remove_box(q, box)
        results.append(q)
    return results


def lambda_diagram(i):
    """Right-black diagram black at every label <= i - 1, white above."""
    diffs = range(1, i) if i >= 1 else range(i, 1)
    return MayaDiagram(RIGHT_BLACK, diffs)


def s_lambda_diagram(i):
    """lambda_diagram(i) with the two colors adjacent to the boundary swapped."""
    base = lambda_diagram(i)
    return MayaDiagram(RIGHT_BLACK, base.diffs ^ {i - 1, i})


def invert_outside(t, interval):
    """Left-black diagram agreeing with right-black t inside the interval,
    color-inverted outside it.  The interval must contain t's deviations."""
    if t.kind != RIGHT_BLACK:
        raise ValueError("invert_outside expects a right-black diagram")
    if t.diffs and not (interval.lo <= min(t.diffs) and max(t.diffs) <= interval.hi):
        raise ValueError("interval %r does not contain the support" % (interval,))
    lo = min(interval.lo, 0) - 1
    hi = max(interval.hi, 1) + 1
    overrides = {}
    for label in range(lo, hi + 1):
        c = t.color(label)
        if label not in interval:
            c = WHITE if c == BLACK else BLACK
        overrides[label] = c
    return MayaDiagram.from_colors(LEFT_BLACK, overrides)


def sigma_shift(m, n):
    """Translate slot labels by n; see MayaDiagram.shift."""
    return m.shift(n)


@lru_cache(maxsize=None)
def partitions_of(total):
    """All partitions of ``total`` as weakly decreasing tuples, sorted."""
    if total == 0:
        return ((),)
    out = []

    def build(remaining, cap, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for first in range(min(remaining, cap), 0, -1):
            build(remaining - first, first, prefix + [first])

    build(total, total, [])
    return tuple(sorted(out))


def partitions_up_to(max_boxes):
    """All partitions with at most max_boxes boxes, smaller sizes first."""
    for total in range(max_boxes + 1):
        yield from partitions_of(total)
