"""Finite subtrees of the universal cover of the n-Kronecker quiver.

The cover is the n-regular tree with bipartite orientation.  A vertex is
addressed by a reduced word over the arrow labels ``1..n`` (no two adjacent
letters equal), read as a walk from a fixed base sink ``()``.  Even-length
words are sinks, odd-length words are sources, and the neighbour of ``w``
across label ``l`` is ``w + (l,)`` reduced.  Edges always point from the
source end to the sink end.

Deck transformations are left multiplications by even words: the vertex
``w`` goes to ``reduce(g + w)``.  Left multiplication by an odd word is
still a label-preserving graph automorphism but swaps sources and sinks,
which is exactly what duality needs.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import BudgetExceededError, DomainError
from .roots import DimVector, check_index, cover_thin_violation

__all__ = [
    "Word",
    "Color",
    "reduce_word",
    "color_of",
    "step",
    "inverse_word",
    "LabeledSubtree",
    "validate_subtree",
    "translate",
    "canonical_form",
    "canonical_code",
    "default_composition",
    "check_composition",
    "canonical_construction",
    "small_case_construction",
    "cover_thin_tree",
    "permute_labels",
    "dualize",
    "iter_subtrees",
    "enumerate_subtrees",
    "overlap_alignments",
    "format_word",
    "subtree_to_dot",
    "DEFAULT_BUDGET",
]

Word = tuple[int, ...]

DEFAULT_BUDGET = 12


class Color(enum.Enum):
    SINK = "s"
    SOURCE = "t"


def color_of(word: Word) -> Color:
    return Color.SOURCE if len(word) % 2 else Color.SINK


def reduce_word(word: Iterable[int]) -> Word:
    out: list[int] = []
    for letter in word:
        if out and out[-1] == letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def step(word: Word, label: int) -> Word:
    """Neighbour of ``word`` across the edge labelled ``label``."""
    if word and word[-1] == label:
        return word[:-1]
    return word + (label,)


def inverse_word(word: Word) -> Word:
    # every generator is an involution
    return tuple(reversed(word))


def format_word(word: Word) -> str:
    return ".".join(map(str, word)) if word else "e"


@dataclass(frozen=True)
class LabeledSubtree:
    """A finite connected vertex set of the cover; edges are the induced ones.

    Because the cover is a tree, a connected vertex set spans a subtree and
    determines its labelled edges, so only the vertices are stored.
    """

    n: int
    vertices: frozenset

    def __post_init__(self):
        if not isinstance(self.vertices, frozenset):
            object.__setattr__(self, "vertices", frozenset(tuple(w) for w in self.vertices))

    @cached_property
    def sources(self) -> list[Word]:
        return sorted(w for w in self.vertices if len(w) % 2)

    @cached_property
    def sinks(self) -> list[Word]:
        return sorted(w for w in self.vertices if not len(w) % 2)

    @property
    def dim(self) -> DimVector:
        return DimVector(len(self.sources), len(self.sinks))

    def __len__(self) -> int:
        return len(self.vertices)

    @cached_property
    def edges(self) -> list[tuple[Word, Word, int]]:
        """``(source, sink, label)`` triples, sorted."""
        out = []
        for t in self.sources:
            for label in range(1, self.n + 1):
                s = step(t, label)
                if s in self.vertices:
                    out.append((t, s, label))
        return out

    def neighbors(self, word: Word) -> list[tuple[int, Word]]:
        out = []
        for label in range(1, self.n + 1):
            u = step(word, label)
            if u in self.vertices:
                out.append((label, u))
        return out


def validate_subtree(tree: LabeledSubtree) -> list[str]:
    """Return a list of broken invariants (empty when ``tree`` is valid)."""
    problems = []
    n = tree.n
    if not tree.vertices:
        return ["empty vertex set"]
    for w in tree.vertices:
        if reduce_word(w) != w:
            problems.append(f"word {w} is not reduced")
        if any(not 1 <= a <= n for a in w):
            problems.append(f"word {w} uses a label outside 1..{n}")
    if len(tree.edges) != len(tree.vertices) - 1:
        problems.append(f"{len(tree.edges)} edges for {len(tree.vertices)} vertices")
    start = next(iter(tree.vertices))
    seen = {start}
    stack = [start]
    while stack:
        w = stack.pop()
        for _, u in tree.neighbors(w):
            if u not in seen:
                seen.add(u)
                stack.append(u)
    if len(seen) != len(tree.vertices):
        problems.append("vertex set is not connected")
    for t, s, label in tree.edges:
        if color_of(t) is not Color.SOURCE or color_of(s) is not Color.SINK:
            problems.append(f"edge {t}->{s} does not run source to sink")
        if step(t, label) != s:
            problems.append(f"edge {t}->{s} inconsistent with label {label}")
    return problems


def translate(tree: LabeledSubtree, g: Word) -> LabeledSubtree:
    """Image of ``tree`` under left multiplication by ``g``."""
    g = tuple(g)
    return LabeledSubtree(tree.n, frozenset(reduce_word(g + w) for w in tree.vertices))


# ---------------------------------------------------------------------------
# canonical forms


def _centers(tree: LabeledSubtree) -> list[Word]:
    degree = {w: len(tree.neighbors(w)) for w in tree.vertices}
    leaves = [w for w, d in degree.items() if d <= 1]
    remaining = len(degree)
    while remaining > 2:
        remaining -= len(leaves)
        new_leaves = []
        for leaf in leaves:
            for _, u in tree.neighbors(leaf):
                if degree[u] > 0:
                    degree[u] -= 1
                    if degree[u] == 1:
                        new_leaves.append(u)
            degree[leaf] = 0
        leaves = new_leaves
    return sorted(leaves)


def _rooted(tree: LabeledSubtree, root: Word) -> tuple[str, list[Word]]:
    def visit(w: Word, parent: Word | None) -> tuple[str, list[Word]]:
        keyed = []
        for label, u in tree.neighbors(w):
            if u == parent:
                continue
            code, order = visit(u, w)
            keyed.append(((label, color_of(u).value, code), order))
        keyed.sort(key=lambda item: item[0])
        parts = [color_of(w).value, "["]
        order = [w]
        for (label, _, code), sub in keyed:
            parts.append(f"{label}{code}")
            order.extend(sub)
        parts.append("]")
        return "".join(parts), order

    return visit(root, None)


def canonical_form(tree: LabeledSubtree) -> tuple[bytes, list[Word]]:
    """Canonical code plus the vertex order it induces (preorder from the centre).

    Bicentral trees are rooted at whichever centre gives the smaller code.
    """
    best = min(_rooted(tree, c) for c in _centers(tree))
    return best[0].encode("ascii"), best[1]


def canonical_code(tree: LabeledSubtree) -> bytes:
    return canonical_form(tree)[0]


# ---------------------------------------------------------------------------
# constructions


def check_composition(n: int, x: int, y: int, parts: Sequence[int]) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    if len(parts) != x:
        raise DomainError(f"composition has {len(parts)} parts, expected x = {x}")
    if sum(parts) != y:
        raise DomainError(f"composition sums to {sum(parts)}, expected y = {y}")
    for i, part in enumerate(parts, start=1):
        if part < 1:
            raise DomainError(f"part y({i}) = {part} violates y({i}) >= 1")
        if i < x and part > n - 1:
            raise DomainError(f"part y({i}) = {part} violates y({i}) <= n-1 = {n - 1}")
        if i == x and part > n:
            raise DomainError(f"last part y({i}) = {part} violates y(x) <= n = {n}")
    return parts


def _check_bounds(n: int, x: int, y: int, min_x: int) -> None:
    if x < min_x:
        raise DomainError(f"x = {x} violates x >= {min_x}")
    if x > y:
        raise DomainError(f"x = {x} > y = {y} violates x <= y")
    if y > (n - 1) * x + 1:
        raise DomainError(f"y = {y} violates y <= (n-1)x+1 = {(n - 1) * x + 1}")


def default_composition(n: int, x: int, y: int) -> tuple[int, ...]:
    """Greedy split of ``y`` into ``x`` parts, front-loading ``n - 1``."""
    n = check_index(n)
    _check_bounds(n, x, y, 1)
    parts = []
    rest = y
    for i in range(1, x):
        part = min(n - 1, rest - (x - i))
        parts.append(part)
        rest -= part
    parts.append(rest)
    return check_composition(n, x, y, parts)


def canonical_construction(n: int, x: int, y: int, composition: Sequence[int] | None = None) -> LabeledSubtree:
    """Zigzag ``s1 <-1- t1 -n-> s2 <-1- ... <-1- t_x`` with extra leaves ``2..y(i)`` at ``t_i``."""
    n = check_index(n)
    _check_bounds(n, x, y, 2)
    parts = default_composition(n, x, y) if composition is None else check_composition(n, x, y, composition)
    vertices = []
    sink: Word = ()
    for i, part in enumerate(parts):
        vertices.append(sink)
        source = sink + (1,)
        vertices.append(source)
        vertices.extend(source + (j,) for j in range(2, part + 1))
        sink = source + (n,)
    return LabeledSubtree(n, frozenset(vertices))


def small_case_construction(n: int, x: int, y: int) -> LabeledSubtree:
    n = check_index(n)
    if (x, y) == (0, 1):
        return LabeledSubtree(n, frozenset({()}))
    if x != 1:
        raise DomainError(f"small case needs (x, y) = (0, 1) or x = 1, got ({x}, {y})")
    if not 1 <= y <= n:
        raise DomainError(f"y = {y} violates 1 <= y <= n = {n}")
    return LabeledSubtree(n, frozenset([(), (1,)] + [(1, j) for j in range(2, y + 1)]))


def cover_thin_tree(
    n: int,
    x: int,
    y: int,
    composition: Sequence[int] | None = None,
    perm: Sequence[int] | None = None,
) -> LabeledSubtree:
    """A cover-thin subtree of dimension ``(x, y)``; dualizes when ``x > y``."""
    n = check_index(n)
    violation = cover_thin_violation(n, (x, y))
    if violation is not None:
        raise DomainError(f"no cover-thin module: {violation}")
    lo, hi = min(x, y), max(x, y)
    if lo <= 1:
        if composition is not None:
            check_composition(n, lo, hi, composition)
        tree = small_case_construction(n, lo, hi)
    else:
        tree = canonical_construction(n, lo, hi, composition)
    if perm is not None:
        tree = permute_labels(tree, perm)
    if x > y:
        tree = dualize(tree)
    return tree


def _check_perm(n: int, sigma: Sequence[int]) -> tuple[int, ...]:
    sigma = tuple(int(s) for s in sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise DomainError(f"{sigma} is not a permutation of 1..{n}")
    return sigma


def permute_labels(tree: LabeledSubtree, sigma: Sequence[int]) -> LabeledSubtree:
    """Relabel every arrow ``l`` as ``sigma[l - 1]``."""
    sigma = _check_perm(tree.n, sigma)
    return LabeledSubtree(tree.n, frozenset(tuple(sigma[a - 1] for a in w) for w in tree.vertices))


def dualize(tree: LabeledSubtree) -> LabeledSubtree:
    return translate(tree, (1,))


# ---------------------------------------------------------------------------
# enumeration
#
# Every deck class has a unique distinguished vertex: the centre of the tree,
# or the sink end of the central edge for bicentral trees.  Placing that
# vertex at the base (a sink at (), a source at (1,)) gives exactly one
# embedded representative per class, so no deduplication is needed.
#
# A "branch" below a vertex reached through label ``excl`` is counted by
# (a, b, h): a vertices of the top's colour, b of the other colour, height h.


@lru_cache(maxsize=None)
def _count_branch(n: int, a: int, b: int, h: int) -> int:
    if h == 0:
        return int(a == 1 and b == 0)
    return _count_children(n, n - 1, b, a - 1, h - 1, 1)


@lru_cache(maxsize=None)
def _count_children(n: int, slots: int, ra: int, rb: int, hmax: int, hits: int) -> int:
    # ra: vertices of the children's colour still to place, rb: of the parent's
    if ra == 0 and rb == 0:
        return int(hits <= 0)
    if slots == 0 or ra < 1 or hmax < 0:
        return 0
    total = _count_children(n, slots - 1, ra, rb, hmax, hits)
    for ac in range(1, ra + 1):
        for bc in range(rb + 1):
            for hc in range(hmax + 1):
                c = _count_branch(n, ac, bc, hc)
                if c:
                    total += c * _count_children(n, slots - 1, ra - ac, rb - bc, hmax, hits - (hc == hmax))
    return total


_OTHER = {"s": "t", "t": "s"}


def _gen_branch(n: int, excl: int, a: int, b: int, h: int, color: str) -> Iterator[tuple]:
    if h == 0:
        if a == 1 and b == 0:
            yield (color, ())
        return
    labels = tuple(label for label in range(1, n + 1) if label != excl)
    for children in _gen_children(n, labels, 0, b, a - 1, h - 1, 1, _OTHER[color]):
        yield (color, children)


def _gen_children(n, labels, i, ra, rb, hmax, hits, ccolor) -> Iterator[tuple]:
    if ra == 0 and rb == 0:
        if hits <= 0:
            yield ()
        return
    if not _count_children(n, len(labels) - i, ra, rb, hmax, hits):
        return
    yield from _gen_children(n, labels, i + 1, ra, rb, hmax, hits, ccolor)
    label = labels[i]
    for ac in range(1, ra + 1):
        for bc in range(rb + 1):
            for hc in range(hmax + 1):
                if not _count_branch(n, ac, bc, hc):
                    continue
                left = hits - (hc == hmax)
                if not _count_children(n, len(labels) - i - 1, ra - ac, rb - bc, hmax, left):
                    continue
                for child in _gen_branch(n, label, ac, bc, hc, ccolor):
                    for rest in _gen_children(n, labels, i + 1, ra - ac, rb - bc, hmax, left, ccolor):
                        yield ((label, child),) + rest


def _node_code(node) -> str:
    color, children = node
    return color + "[" + "".join(f"{label}{_node_code(child)}" for label, child in children) + "]"


def _node_words(node, base: Word, out: list) -> None:
    out.append(base)
    for label, child in node[1]:
        _node_words(child, step(base, label), out)


def _materialize(n: int, node, base: Word) -> tuple[bytes, LabeledSubtree]:
    words: list[Word] = []
    _node_words(node, base, words)
    return _node_code(node).encode("ascii"), LabeledSubtree(n, frozenset(words))


def _iter_coded(n: int, x: int, y: int) -> Iterator[tuple[bytes, LabeledSubtree]]:
    k = x + y
    if k == 0:
        return
    if k == 1:
        yield _materialize(n, ("s" if y else "t", ()), () if y else (1,))
        return
    labels = tuple(range(1, n + 1))
    for r in range(1, k):
        # unicentral: at least two branches reach depth r
        if y >= 1:
            for children in _gen_children(n, labels, 0, x, y - 1, r - 1, 2, "t"):
                yield _materialize(n, ("s", children), ())
        if x >= 1:
            for children in _gen_children(n, labels, 0, y, x - 1, r - 1, 2, "s"):
                yield _materialize(n, ("t", children), (1,))
    for r in range(0, k):
        for label in labels:
            # central edge: sink u at (), source v at (label,)
            for au in range(1, y + 1):
                for bu in range(0, x):
                    av, bv = x - bu, y - au
                    if not (_count_branch(n, au, bu, r) and _count_branch(n, av, bv, r)):
                        continue
                    for u_node in _gen_branch(n, label, au, bu, r, "s"):
                        for v_node in _gen_branch(n, label, av, bv, r, "t"):
                            children = tuple(sorted(u_node[1] + ((label, v_node),), key=lambda c: c[0]))
                            yield _materialize(n, ("s", children), ())


def resolve_budget(budget: int | None) -> int:
    import os

    if budget is not None:
        return int(budget)
    env = os.environ.get("KRONREP_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def iter_subtrees(n: int, x: int, y: int, budget: int | None = None) -> Iterator[LabeledSubtree]:
    """Lazily yield one subtree per deck class, in generation order."""
    for _, tree in _iter_coded_checked(n, x, y, budget):
        yield tree


def _iter_coded_checked(n, x, y, budget):
    n = check_index(n)
    if x < 0 or y < 0:
        raise DomainError(f"negative dimension vector ({x}, {y})")
    budget = resolve_budget(budget)
    if x + y > budget:
        raise BudgetExceededError(x + y, budget)
    return _iter_coded(n, x, y)


def enumerate_subtrees(n: int, x: int, y: int, budget: int | None = None) -> list[LabeledSubtree]:
    """One representative per deck class of subtrees with x sources and y sinks, sorted by code."""
    coded = sorted(_iter_coded_checked(n, x, y, budget), key=lambda item: item[0])
    return [tree for _, tree in coded]


def count_subtree_classes(n: int, x: int, y: int) -> int:
    """Number of deck classes, from the same centre decomposition (no trees built)."""
    n = check_index(n)
    k = x + y
    if k <= 1:
        return int(k == 1)
    total = 0
    for r in range(1, k):
        if y >= 1:
            total += _count_children(n, n, x, y - 1, r - 1, 2)
        if x >= 1:
            total += _count_children(n, n, y, x - 1, r - 1, 2)
    for r in range(k):
        for au in range(1, y + 1):
            for bu in range(x):
                total += n * _count_branch(n, au, bu, r) * _count_branch(n, x - bu, y - au, r)
    return total


# ---------------------------------------------------------------------------
# deck alignments


def overlap_alignments(first: LabeledSubtree, second: LabeledSubtree) -> list[Word]:
    """All deck transformations ``g`` (even words) with ``g.second`` meeting ``first``.

    A deck transformation is pinned down by the image of one vertex, so
    matching every vertex of ``second`` with every same-coloured vertex of
    ``first`` finds all of them.
    """
    found = set()
    for v in first.vertices:
        for w in second.vertices:
            if len(v) % 2 == len(w) % 2:
                found.add(reduce_word(v + inverse_word(w)))
    return sorted(found, key=lambda g: (len(g), g))


def subtree_to_dot(tree: LabeledSubtree, name: str = "subtree") -> str:
    _, order = canonical_form(tree)
    ids = {w: f"v{i}" for i, w in enumerate(order)}
    lines = [f"digraph {name} {{"]
    for w in order:
        shape = "box" if color_of(w) is Color.SOURCE else "circle"
        lines.append(f'  {ids[w]} [shape={shape}, label="{format_word(w)}"];')
    edges = sorted(tree.edges, key=lambda e: (order.index(e[0]), order.index(e[1])))
    for t, s, label in edges:
        lines.append(f'  {ids[t]} -> {ids[s]} [label="α{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def all_label_permutations(n: int) -> Iterator[tuple[int, ...]]:
    return itertools.permutations(range(1, n + 1))
