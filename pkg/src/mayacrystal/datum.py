"""Word-backed crystal data on Maya diagrams.

A datum is an integer-valued function on all left-black Maya diagrams,
represented by the sequence of lowering operators that produced it from the
zero datum O (which assigns 0 to every diagram).  Values are demand-computed
through the min-recursion

    (f_i M)(g) = min over mu in removal_subsets(g, i) of
                 M(mu) + |g \\ mu| * c_i(M),      c_i(M) = M(L_i) - M(sL_i) - 1

where L_i / sL_i are the fundamental right-black diagrams, extended to
right-black arguments by interval-inversion stabilization (theta).  All
values are n-periodic: evaluation happens on sigma-orbit canonical
representatives (charge reduced mod n).
"""

from __future__ import annotations

from functools import lru_cache

from .maya import (
    LEFT_BLACK,
    RIGHT_BLACK,
    Interval,
    invert_outside,
    lambda_diagram,
    partitions_of,
    removable_boxes,
    remove_box,
    s_lambda_diagram,
    to_partition,
)


class ThetaStabilizationError(RuntimeError):
    """Interval-inverted values failed to stabilize within the hard bound."""


class CartanData:
    """Rank and affine type-A Cartan matrix over residues mod n."""

    def __init__(self, n):
        if n < 2:
            raise ValueError("rank must be at least 2, got %d" % n)
        self.n = n
        matrix = [[0] * n for _ in range(n)]
        for i in range(n):
            matrix[i][i] = 2
            for step in (1, -1):
                matrix[i][(i + step) % n] -= 1
        self.matrix = tuple(tuple(row) for row in matrix)

    def pairing(self, weight, i):
        """<sum_j weight_j h_j, alpha_i> via the Cartan matrix."""
        i %= self.n
        return sum(weight[j] * self.matrix[j][i] for j in range(self.n))

    def __eq__(self, other):
        return isinstance(other, CartanData) and self.n == other.n

    def __hash__(self):
        return hash(("CartanData", self.n))

    def __repr__(self):
        return "CartanData(n=%d)" % self.n


@lru_cache(maxsize=None)
def _removal_options(n, parts, charge, i):
    """Nonempty removal subsets of residue-i corner boxes: (new_parts, count).

    Keyed on the raw parts tuple so huge interval-inversion partitions share
    work across data.
    """
    from .maya import ChargedPartition

    p = ChargedPartition(parts, charge)
    boxes = removable_boxes(p, i, n)
    options = []
    for mask in range(1, 1 << len(boxes)):
        q = p
        count = 0
        for j, box in enumerate(boxes):
            if mask >> j & 1:
                q = remove_box(q, box)
                count += 1
        options.append((q.parts, count))
    return tuple(options)


class CrystalDatum:
    """A crystal element: the zero datum O or f_i applied to a parent datum.

    Instances memoize their values, their theta values, and their derived
    statistics; children created through :meth:`apply` are shared, so
    repeated prefix evaluations hit warm caches.
    """

    def __init__(self, cartan, parent=None, letter=None):
        self.cartan = cartan
        self.parent = parent
        if parent is None:
            self.letter = None
            self.word = ()
        else:
            self.letter = letter % cartan.n
            self.word = parent.word + (self.letter,)
        self._memo = {}
        self._theta_memo = {}
        self._c = {}
        self._children = {}

    @classmethod
    def zero(cls, cartan):
        return cls(cartan)

    def apply(self, i):
        """The datum for one more lowering operator f_i (word bookkeeping only)."""
        i %= self.cartan.n
        child = self._children.get(i)
        if child is None:
            child = CrystalDatum(self.cartan, self, i)
            self._children[i] = child
        return child

    # -- evaluation on left-black diagrams ---------------------------------

    def eval(self, gamma):
        """Value at a left-black Maya diagram."""
        if gamma.kind != LEFT_BLACK:
            raise ValueError("eval expects a left-black diagram")
        p = to_partition(gamma)
        return self.value_at(p.parts, p.charge % self.cartan.n)

    def value_at(self, parts, charge):
        """Value at the diagram of (parts, charge); charge is reduced mod n."""
        if self.parent is None:
            return 0
        charge %= self.cartan.n
        key = (parts, charge)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        coeff = self.parent.c_coeff(self.letter)
        best = self.parent.value_at(parts, charge)
        for sub_parts, count in _removal_options(
            self.cartan.n, parts, charge, self.letter
        ):
            v = self.parent.value_at(sub_parts, charge) + count * coeff
            if v < best:
                best = v
        self._memo[key] = best
        return best

    # -- extension to right-black diagrams ---------------------------------

    def theta(self, tau):
        """Stabilized value at a right-black diagram.

        Evaluates on interval inversions over a growing schedule and accepts
        once two consecutive intervals agree; the hard bound only trips on an
        implementation bug since stabilization is guaranteed.
        """
        if tau.kind != RIGHT_BLACK:
            raise ValueError("theta expects a right-black diagram")
        tau = tau.shift(tau.charge - tau.charge % self.cartan.n)
        cached = self._theta_memo.get(tau)
        if cached is not None:
            return cached
        if self.parent is None:
            self._theta_memo[tau] = 0
            return 0
        span = max((abs(d) for d in tau.diffs), default=0) + 1
        length = max(len(self.word), 1)
        step = self.cartan.n * length
        previous = None
        for k in range(1, 2 * length + 6):
            bound = span + k * step
            value = self.eval(invert_outside(tau, Interval(-bound, bound)))
            if value == previous:
                self._theta_memo[tau] = value
                return value
            previous = value
        raise ThetaStabilizationError(
            "no stabilization for word %r at %r" % (self.word, tau)
        )

    # -- crystal statistics -------------------------------------------------

    def c_coeff(self, i):
        """Coefficient used in the min-recursion: theta(L_i) - theta(sL_i) - 1."""
        i %= self.cartan.n
        cached = self._c.get(i)
        if cached is None:
            cached = self.theta(lambda_diagram(i)) - self.theta(s_lambda_diagram(i)) - 1
            self._c[i] = cached
        return cached

    def weight(self):
        """Coefficients over the simple coroots: (theta(L_i))_{i mod n}."""
        return tuple(self.theta(lambda_diagram(i)) for i in range(self.cartan.n))

    def eps_hat(self, i):
        """String statistic from the four neighboring fundamental diagrams.

        Integer indices are used literally; for n = 2 the i-1 and i+1
        diagrams are distinct but carry equal values by periodicity.
        """
        return (
            -self.theta(lambda_diagram(i))
            - self.theta(s_lambda_diagram(i))
            + self.theta(lambda_diagram(i - 1))
            + self.theta(lambda_diagram(i + 1))
        )

    def phi_hat(self, i):
        """<wt, h_i> + eps_hat(i); equals c_coeff(i) + 1 (tested identity)."""
        return self.cartan.pairing(self.weight(), i) + self.eps_hat(i)

    # -- equality surrogate ---------------------------------------------------

    def fingerprint(self, max_boxes):
        """Statistics plus the value table over sigma-canonical diagrams with
        at most max_boxes boxes.

        The weight and string statistics are prepended because value tables
        over a bounded window can coincide for elements that differ only on
        larger diagrams.  The enumeration order is fixed (charge 0..n-1,
        then box count, then lexicographic parts), making fingerprints
        directly comparable.
        """
        n = self.cartan.n
        stats = self.weight() + tuple(self.eps_hat(i) for i in range(n))
        return stats + tuple(
            self.value_at(parts, charge)
            for parts, charge in canonical_diagrams(n, max_boxes)
        )

    def value_table(self, max_boxes):
        """JSON-friendly list of {"diagram": ..., "value": k} rows."""
        from .maya import ChargedPartition, from_partition

        rows = []
        for parts, charge in canonical_diagrams(self.cartan.n, max_boxes):
            diagram = from_partition(ChargedPartition(parts, charge))
            rows.append({"diagram": diagram.to_json(), "value": self.value_at(parts, charge)})
        return rows

    def to_json(self):
        return {"n": self.cartan.n, "word": list(self.word)}

    @classmethod
    def from_json(cls, data):
        datum = cls.zero(CartanData(int(data["n"])))
        for i in data["word"]:
            datum = datum.apply(int(i))
        return datum

    def drop_caches(self):
        """Release value memos (used when a freshly explored node dedups away)."""
        self._memo = {}
        self._theta_memo = {}

    def __repr__(self):
        return "CrystalDatum(n=%d, word=%r)" % (self.cartan.n, list(self.word))


def zero_datum(cartan):
    return CrystalDatum.zero(cartan)


def datum_from_word(cartan, word):
    datum = CrystalDatum.zero(cartan)
    for i in word:
        datum = datum.apply(i)
    return datum


@lru_cache(maxsize=None)
def canonical_diagrams(n, max_boxes):
    """Fixed enumeration of sigma-canonical (parts, charge) pairs."""
    out = []
    for charge in range(n):
        for total in range(max_boxes + 1):
            for parts in partitions_of(total):
                out.append((parts, charge))
    return tuple(out)


class SingleColorView:
    """Evaluation of a product of single-integer-color lowering operators.

    The building block behind the residue operators: each letter is an
    integer slot color (not a residue) and acts through the one-or-two
    element min over removing the unique corner box of that exact label.
    Coefficients are taken from the base datum, which is valid as long as
    no letter repeats (letters in one sigma-orbit commute).
    """

    def __init__(self, base, letters=()):
        self.base = base
        self.letters = tuple(letters)

    def apply(self, color):
        return SingleColorView(self.base, self.letters + (color,))

    def value(self, gamma):
        p = to_partition(gamma)
        return self._value(p.parts, p.charge)

    def _value(self, parts, charge):
        if not self.letters:
            return self.base.value_at(parts, charge % self.base.cartan.n)
        color = self.letters[-1]
        prefix = SingleColorView(self.base, self.letters[:-1])
        best = prefix._value(parts, charge)
        coeff = self.base.c_coeff(color)
        from .maya import ChargedPartition

        p = ChargedPartition(parts, charge)
        for box in removable_boxes(p, 0, 1):  # every corner box
            if box.slot_label == color:
                q = remove_box(p, box)
                best = min(best, prefix._value(q.parts, charge) + coeff)
        return best


def ftilde_ainfty(base, color):
    """Single-color operator applied once to a datum; returns an evaluator."""
    return SingleColorView(base).apply(color)
