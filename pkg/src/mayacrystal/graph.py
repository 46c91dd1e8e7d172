"""Crystal graph exploration, axiom checking, and the Kostant census oracle.

The graph is grown breadth-first from the zero datum; nodes are deduplicated
by their value-table fingerprint over diagrams with at most ``max_boxes``
boxes (default n*(depth+1), validated empirically by the census).  Raising
operators exist only as edge inversions.  The independent oracle counts
multiset decompositions of a positive root-lattice element into positive
roots of untwisted affine type A, with imaginary roots m*delta carrying
multiplicity n - 1.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .datum import CartanData, CrystalDatum


@dataclass
class Node:
    id: int
    word: tuple
    depth: int
    weight: tuple
    eps: tuple
    phi: tuple
    datum: CrystalDatum | None = None
    fingerprint: tuple | None = field(default=None, repr=False)


class CrystalGraph:
    """Explored, deduplicated crystal with lowering edges."""

    def __init__(self, n, depth, max_boxes, nodes, edges):
        self.n = n
        self.depth = depth
        self.max_boxes = max_boxes
        self.nodes = nodes
        self.edges = edges  # (node_id, residue) -> node_id
        self.reverse = {}
        for (src, i), dst in edges.items():
            self.reverse.setdefault((dst, i), []).append(src)

    def f_hat(self, node_id, i):
        return self.edges.get((node_id, i % self.n))

    def e_hat(self, node_id, i):
        """Unique lowering predecessor along residue i, or None."""
        sources = self.reverse.get((node_id, i % self.n), [])
        if len(sources) > 1:
            raise ValueError(
                "node %d has %d distinct f_%d-predecessors" % (node_id, len(sources), i)
            )
        return sources[0] if sources else None

    def string_length(self, node_id, i):
        """Number of times e_hat applies before hitting None."""
        count = 0
        current = node_id
        while True:
            previous = self.e_hat(current, i)
            if previous is None:
                return count
            count += 1
            current = previous


def default_max_boxes(n, depth):
    return n * (depth + 1)


def explore(cartan, depth, max_boxes=None):
    """All crystal elements reachable by at most ``depth`` lowering steps."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    n = cartan.n
    if max_boxes is None:
        max_boxes = default_max_boxes(n, depth)
    root = CrystalDatum.zero(cartan)
    nodes = [_make_node(0, root, 0, max_boxes)]
    by_fingerprint = {nodes[0].fingerprint: 0}
    edges = {}
    frontier = [0]
    for level in range(depth):
        next_frontier = []
        for node_id in frontier:
            for i in range(n):
                child = nodes[node_id].datum.apply(i)
                fp = child.fingerprint(max_boxes)
                target = by_fingerprint.get(fp)
                if target is None:
                    target = len(nodes)
                    nodes.append(_make_node(target, child, level + 1, max_boxes))
                    by_fingerprint[fp] = target
                    next_frontier.append(target)
                elif nodes[target].datum is not child:
                    child.drop_caches()
                edges[(node_id, i)] = target
        frontier = next_frontier
    nodes, edges = _sort_nodes(nodes, edges)
    return CrystalGraph(n, depth, max_boxes, nodes, edges)


def _make_node(node_id, datum, depth, max_boxes):
    n = datum.cartan.n
    return Node(
        id=node_id,
        word=datum.word,
        depth=depth,
        weight=datum.weight(),
        eps=tuple(datum.eps_hat(i) for i in range(n)),
        phi=tuple(datum.c_coeff(i) + 1 for i in range(n)),
        datum=datum,
        fingerprint=datum.fingerprint(max_boxes),
    )


def _sort_nodes(nodes, edges):
    order = sorted(range(len(nodes)), key=lambda k: (nodes[k].weight, nodes[k].fingerprint))
    remap = {old: new for new, old in enumerate(order)}
    sorted_nodes = []
    for old in order:
        node = nodes[old]
        node.id = remap[old]
        sorted_nodes.append(node)
    sorted_edges = {(remap[s], i): remap[d] for (s, i), d in edges.items()}
    return sorted_nodes, sorted_edges


def check_axioms(graph):
    """Verify the crystal axioms on every explored node; returns violations."""
    cartan = CartanData(graph.n)
    violations = []
    for node in graph.nodes:
        for i in range(graph.n):
            expected = cartan.pairing(node.weight, i) + node.eps[i]
            if node.phi[i] != expected:
                violations.append(
                    "axiom i: node %d residue %d: phi=%d but eps+<wt,a>=%d"
                    % (node.id, i, node.phi[i], expected)
                )
    for (src, i), dst in sorted(graph.edges.items()):
        a, b = graph.nodes[src], graph.nodes[dst]
        expected_weight = tuple(
            w - (1 if j == i else 0) for j, w in enumerate(a.weight)
        )
        if b.weight != expected_weight:
            violations.append(
                "axiom iii (wt): edge %d -%d-> %d: %r != %r"
                % (src, i, dst, b.weight, expected_weight)
            )
        if b.eps[i] != a.eps[i] + 1:
            violations.append(
                "axiom iii (eps): edge %d -%d-> %d: %d != %d + 1"
                % (src, i, dst, b.eps[i], a.eps[i])
            )
        if b.phi[i] != a.phi[i] - 1:
            violations.append(
                "axiom iii (phi): edge %d -%d-> %d: %d != %d - 1"
                % (src, i, dst, b.phi[i], a.phi[i])
            )
    for (dst, i), sources in sorted(graph.reverse.items()):
        if len(sources) > 1:
            violations.append(
                "axiom iv: node %d has multiple f_%d-predecessors %r" % (dst, i, sources)
            )
        for src in sources:
            if graph.edges.get((src, i)) != dst:
                violations.append(
                    "axiom iv: reverse edge (%d, %d) -> %d not mirrored" % (dst, i, src)
                )
    zero_weight = [node for node in graph.nodes if not any(node.weight)]
    if len(zero_weight) != 1:
        violations.append("source: expected exactly one weight-0 node, found %d" % len(zero_weight))
    return violations


def weight_census(graph):
    """Count nodes per positive root-lattice element beta (weight = -beta)."""
    census = {}
    for node in graph.nodes:
        beta = tuple(-w for w in node.weight)
        census[beta] = census.get(beta, 0) + 1
    return census


def positive_roots(n, max_height):
    """Positive roots of height <= max_height as coefficient vectors over the
    simple roots; imaginary multiples of delta are repeated n - 1 times."""
    if max_height < 1:
        return []
    delta = (1,) * n
    finite = []
    for j in range(1, n):
        for k in range(j, n):
            root = [0] * n
            for idx in range(j, k + 1):
                root[idx] = 1
            finite.append(tuple(root))
    roots = []
    m = 0
    while m * n + 1 <= max_height:
        shift = tuple(m * d for d in delta)
        for beta in finite:
            real = tuple(b + s for b, s in zip(beta, shift))
            if sum(real) <= max_height:
                roots.append(real)
            anti = tuple(d - b + s for b, d, s in zip(beta, delta, shift))
            if sum(anti) <= max_height:
                roots.append(anti)
        m += 1
    m = 1
    while m * n <= max_height:
        roots.extend([tuple(m * d for d in delta)] * (n - 1))
        m += 1
    roots.sort()
    return roots


def kostant(cartan, beta):
    """Number of decompositions of beta into positive roots (dynamic program)."""
    beta = tuple(beta)
    if len(beta) != cartan.n or any(b < 0 for b in beta):
        raise ValueError("beta must be a nonnegative vector of length n")
    height = sum(beta)
    if height == 0:
        return 1
    vectors = sorted(
        itertools.product(*(range(b + 1) for b in beta)), key=lambda v: (sum(v), v)
    )
    ways = {v: 0 for v in vectors}
    ways[(0,) * cartan.n] = 1
    for root in positive_roots(cartan.n, height):
        for v in vectors:
            prev = tuple(a - b for a, b in zip(v, root))
            if all(x >= 0 for x in prev):
                ways[v] += ways[prev]
    return ways[beta]


def kostant_brute(cartan, beta):
    """Independent check: direct enumeration of root multisets summing to beta."""
    beta = tuple(beta)
    height = sum(beta)
    if height == 0:
        return 1
    roots = positive_roots(cartan.n, height)

    def count(idx, remaining):
        if not any(remaining):
            return 1
        if idx == len(roots):
            return 0
        total = 0
        current = remaining
        while True:
            total += count(idx + 1, current)
            nxt = tuple(a - b for a, b in zip(current, roots[idx]))
            if any(x < 0 for x in nxt):
                break
            current = nxt
        return total

    return count(0, beta)


def lattice_points(n, max_height):
    """All beta in the positive span of the simple roots with height <= max."""
    out = []
    for height in range(max_height + 1):
        for combo in itertools.combinations(range(height + n - 1), n - 1):
            cuts = (-1,) + combo + (height + n - 1,)
            out.append(tuple(cuts[i + 1] - cuts[i] - 1 for i in range(n)))
    return out


def export(graph, fmt):
    """Deterministic DOT or JSON rendering of an explored graph."""
    if fmt == "json":
        payload = {
            "n": graph.n,
            "depth": graph.depth,
            "max_boxes": graph.max_boxes,
            "nodes": [
                {
                    "id": node.id,
                    "word": list(node.word),
                    "weight": list(node.weight),
                    "eps": list(node.eps),
                    "phi": list(node.phi),
                }
                for node in graph.nodes
            ],
            "edges": [
                {"from": src, "to": dst, "i": i}
                for (src, i), dst in sorted(graph.edges.items())
            ],
        }
        return (json.dumps(payload, sort_keys=True, indent=2) + "\n").encode()
    if fmt == "dot":
        lines = ["digraph crystal {"]
        for node in graph.nodes:
            lines.append(
                '  b%d [label="%s"];'
                % (node.id, ",".join(map(str, node.word)) or "O")
            )
        for (src, i), dst in sorted(graph.edges.items()):
            lines.append('  b%d -> b%d [label="%d"];' % (src, dst, i))
        lines.append("}")
        return ("\n".join(lines) + "\n").encode()
    raise ValueError("unsupported format: %r" % (fmt,))


def load_json(data):
    """Rebuild a graph from its JSON export (statistics are trusted as stored)."""
    payload = json.loads(data) if isinstance(data, (str, bytes)) else data
    nodes = [
        Node(
            id=row["id"],
            word=tuple(row["word"]),
            depth=len(row["word"]),
            weight=tuple(row["weight"]),
            eps=tuple(row["eps"]),
            phi=tuple(row["phi"]),
        )
        for row in sorted(payload["nodes"], key=lambda r: r["id"])
    ]
    edges = {(row["from"], row["i"]): row["to"] for row in payload["edges"]}
    return CrystalGraph(payload["n"], payload["depth"], payload["max_boxes"], nodes, edges)
