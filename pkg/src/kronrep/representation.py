"""Kronecker modules as matrices, and the covering-theory computations on them.

A module over the n-Kronecker quiver is stored as ``n`` matrices of shape
``y x x``: column space = vector space at the source, row space = vector
space at the sink.  Morphisms ``M -> N`` are pairs ``(A, B)`` with ``A`` of
shape ``x' x x`` and ``B`` of shape ``y' x y`` such that
``B @ M[i] == N[i] @ A`` for every arrow ``i``.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .cover import (
    LabeledSubtree,
    Word,
    canonical_code,
    canonical_form,
    format_word,
    overlap_alignments,
    step,
    translate,
)
from .errors import DomainError, FieldMismatchError
from .linalg import F2, FieldSpec, parse_field
from .roots import DimVector, check_index

__all__ = [
    "DEFAULT_SEED",
    "KroneckerModule",
    "direct_sum",
    "simple_module",
    "pushdown",
    "CoefficientQuiverReport",
    "coefficient_quiver_report",
    "HomSpace",
    "hom_space",
    "Verdict",
    "Splitting",
    "EndResult",
    "end_is_local",
    "hom_dim_via_overlaps",
    "iso_cover_thin",
    "modules_isomorphic",
    "module_to_dict",
    "module_from_dict",
    "module_to_json",
    "coefficient_quiver_dot",
]

DEFAULT_SEED = 0xC0FFEE


@dataclass(frozen=True, eq=False)
class KroneckerModule:
    n: int
    field: FieldSpec
    matrices: tuple
    basis_tags: dict | None = None

    def __post_init__(self):
        check_index(self.n)
        if len(self.matrices) != self.n:
            raise DomainError(f"expected {self.n} matrices, got {len(self.matrices)}")
        shapes = {m.shape for m in self.matrices}
        if len(shapes) != 1:
            raise DomainError(f"matrices disagree in shape: {sorted(shapes)}")
        if self.basis_tags is not None:
            y, x = self.matrices[0].shape
            if len(self.basis_tags["cols"]) != x or len(self.basis_tags["rows"]) != y:
                raise DomainError("basis tags do not match the matrix shape")

    @property
    def dim(self) -> DimVector:
        y, x = self.matrices[0].shape
        return DimVector(x, y)

    @property
    def total_dim(self) -> int:
        return self.dim.total

    @property
    def nonzeros(self) -> int:
        return int(sum(np.count_nonzero(m != 0) for m in self.matrices))

    @classmethod
    def from_lists(cls, n: int, field: FieldSpec, dim, matrices, basis_tags=None) -> "KroneckerModule":
        x, y = dim
        mats = tuple(field.array(m, shape=(y, x)) for m in matrices)
        return cls(n, field, mats, basis_tags)


def simple_module(n: int, field: FieldSpec, vertex: int) -> KroneckerModule:
    """Simple module at vertex 1 (source, dimension (1, 0)) or 2 (sink, (0, 1))."""
    shape = {1: (0, 1), 2: (1, 0)}.get(vertex)
    if shape is None:
        raise DomainError(f"vertex must be 1 or 2, got {vertex}")
    return KroneckerModule(n, field, tuple(field.zeros(*shape) for _ in range(n)))


def direct_sum(first: KroneckerModule, second: KroneckerModule) -> KroneckerModule:
    _check_compatible(first, second)
    f = first.field
    (x1, y1), (x2, y2) = first.dim, second.dim
    mats = []
    for a, b in zip(first.matrices, second.matrices):
        m = f.zeros(y1 + y2, x1 + x2)
        m[:y1, :x1] = a
        m[y1:, x1:] = b
        mats.append(m)
    return KroneckerModule(first.n, f, tuple(mats))


def _check_compatible(first: KroneckerModule, second: KroneckerModule) -> None:
    if first.field != second.field:
        raise FieldMismatchError(f"modules over {first.field} and {second.field}")
    if first.n != second.n:
        raise FieldMismatchError(f"modules over the {first.n}- and {second.n}-Kronecker quivers")


def pushdown(tree: LabeledSubtree, field: FieldSpec = F2) -> KroneckerModule:
    """Push a thin cover representation down to the Kronecker quiver.

    Sources index columns and sinks index rows, both in canonical-code order,
    so deck translates give identical matrices.
    """
    _, order = canonical_form(tree)
    cols = [w for w in order if len(w) % 2]
    rows = [w for w in order if not len(w) % 2]
    col_of = {w: j for j, w in enumerate(cols)}
    row_of = {w: i for i, w in enumerate(rows)}
    mats = [field.zeros(len(rows), len(cols)) for _ in range(tree.n)]
    for t, s, label in tree.edges:
        mats[label - 1][row_of[s], col_of[t]] = 1
    tags = {"cols": cols, "rows": rows}
    return KroneckerModule(tree.n, field, tuple(mats), tags)


# ---------------------------------------------------------------------------
# coefficient quiver


@dataclass(frozen=True)
class CoefficientQuiverReport:
    total_nonzeros: int
    connected: bool
    acyclic: bool
    is_tree_presentation: bool


def coefficient_quiver_report(module: KroneckerModule) -> CoefficientQuiverReport:
    """Bipartite multigraph on basis vectors, one edge per nonzero entry."""
    x, y = module.dim
    parent = list(range(x + y))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    nonzeros = 0
    acyclic = True
    for m in module.matrices:
        for r, c in zip(*np.nonzero(m != 0)):
            nonzeros += 1
            a, b = find(int(c)), find(x + int(r))
            if a == b:
                acyclic = False
            else:
                parent[a] = b
    components = len({find(i) for i in range(x + y)})
    connected = components == 1
    tree = connected and acyclic and nonzeros == x + y - 1
    return CoefficientQuiverReport(nonzeros, connected, acyclic, tree)


# ---------------------------------------------------------------------------
# Hom spaces


@dataclass
class HomSpace:
    dimension: int
    basis: list  # of (A, B) pairs


def _hom_system(first: KroneckerModule, second: KroneckerModule) -> np.ndarray:
    """Coefficient matrix of ``B M_i - N_i A = 0`` in the unknowns (vec A, vec B), row-major."""
    f = first.field
    x, y = first.dim
    x2, y2 = second.dim
    unknowns = x2 * x + y2 * y
    blocks = []
    for m, nmat in zip(first.matrices, second.matrices):
        block = f.zeros(y2 * x, unknowns)
        if y2 * x and unknowns:
            block[:, : x2 * x] = f.scale(-1, np.kron(nmat, f.identity(x)))
            block[:, x2 * x :] = np.kron(f.identity(y2), m.T)
        blocks.append(block)
    return np.vstack(blocks) if blocks else f.zeros(0, unknowns)


def hom_space(first: KroneckerModule, second: KroneckerModule) -> HomSpace:
    """Hom(first, second) by exact elimination; the basis follows the free columns."""
    _check_compatible(first, second)
    f = first.field
    x, y = first.dim
    x2, y2 = second.dim
    system = _hom_system(first, second)
    basis = []
    for v in f.nullspace(system):
        a = v[: x2 * x].reshape(x2, x)
        b = v[x2 * x :].reshape(y2, y)
        basis.append((a, b))
    return HomSpace(len(basis), basis)


def _is_morphism(first, second, a, b) -> bool:
    f = first.field
    return all(f.is_zero(f.sub(f.matmul(b, m), f.matmul(nm, a))) for m, nm in zip(first.matrices, second.matrices))


def _combine(f: FieldSpec, basis, coeffs):
    a = f.zeros(*basis[0][0].shape)
    b = f.zeros(*basis[0][1].shape)
    for c, (ba, bb) in zip(coeffs, basis):
        if c:
            a = f.add(a, f.scale(c, ba))
            b = f.add(b, f.scale(c, bb))
    return a, b


# ---------------------------------------------------------------------------
# indecomposability


class Verdict(enum.Enum):
    INDECOMPOSABLE = "indecomposable"
    DECOMPOSABLE = "decomposable"
    UNDECIDED = "undecided"


@dataclass
class Splitting:
    """``M = image(phi) + kernel(phi)`` for an endomorphism ``phi = (A, B)``."""

    endomorphism: tuple
    image_dim: DimVector
    kernel_dim: DimVector


@dataclass
class EndResult:
    verdict: Verdict
    end_dim: int
    method: str
    splitting: Splitting | None = field(default=None)


def _rank_pair(f: FieldSpec, a, b) -> int:
    return (f.rank(a) if a.size else 0) + (f.rank(b) if b.size else 0)


def _splitting(module: KroneckerModule, a, b) -> Splitting:
    f = module.field
    ra = f.rank(a) if a.size else 0
    rb = f.rank(b) if b.size else 0
    x, y = module.dim
    return Splitting((a, b), DimVector(ra, rb), DimVector(x - ra, y - rb))


def end_is_local(
    module: KroneckerModule,
    seed: int = DEFAULT_SEED,
    random_trials: int = 16,
    search_limit: int = 10**6,
) -> EndResult:
    """Decide indecomposability with the ladder

    1. ``dim End = 1``: indecomposable;
    2. Fitting: some ``phi^d`` of rank strictly between 0 and ``d``: decomposable;
    3. ``p^dim End <= search_limit``: exhaustive idempotent search over End;
    4. otherwise undecided.

    Over Q only step 1 applies.
    """
    d = module.total_dim
    if d == 0:
        raise DomainError("the zero module is neither decomposable nor indecomposable")
    f = module.field
    end = hom_space(module, module)
    if end.dimension == 1:
        return EndResult(Verdict.INDECOMPOSABLE, 1, "end-dim")
    if not f.is_prime:
        return EndResult(Verdict.UNDECIDED, end.dimension, "rational field: no Fitting step")
    p = f.p
    rng = np.random.default_rng(seed)
    candidates = list(end.basis)
    for _ in range(random_trials):
        coeffs = [int(c) for c in rng.integers(0, p, size=end.dimension)]
        candidates.append(_combine(f, end.basis, coeffs))
    for a, b in candidates:
        pa, pb = f.matpow(a, d), f.matpow(b, d)
        r = _rank_pair(f, pa, pb)
        if 0 < r < d:
            return EndResult(Verdict.DECOMPOSABLE, end.dimension, "fitting", _splitting(module, pa, pb))
    if p**end.dimension <= search_limit:
        identity = (f.identity(module.dim.x), f.identity(module.dim.y))
        for coeffs in itertools.product(range(p), repeat=end.dimension):
            if not any(coeffs):
                continue
            a, b = _combine(f, end.basis, coeffs)
            if f.is_zero(f.sub(a, identity[0])) and f.is_zero(f.sub(b, identity[1])):
                continue
            if np.array_equal(f.matmul(a, a), a) and np.array_equal(f.matmul(b, b), b):
                return EndResult(Verdict.DECOMPOSABLE, end.dimension, "idempotent", _splitting(module, a, b))
        return EndResult(Verdict.INDECOMPOSABLE, end.dimension, "idempotent search")
    return EndResult(Verdict.UNDECIDED, end.dimension, "ladder exhausted")


def modules_isomorphic(first: KroneckerModule, second: KroneckerModule, seed: int = DEFAULT_SEED, random_trials: int = 8) -> bool:
    """Search Hom(first, second) for an isomorphism.

    Exact when both modules are indecomposable: the non-invertible maps then
    form a proper subspace, which cannot contain a whole basis.
    """
    _check_compatible(first, second)
    if first.dim != second.dim:
        return False
    f = first.field
    hom = hom_space(first, second)
    if hom.dimension == 0:
        return False
    candidates = list(hom.basis)
    if f.is_prime:
        rng = np.random.default_rng(seed)
        for _ in range(random_trials):
            coeffs = [int(c) for c in rng.integers(0, f.p, size=hom.dimension)]
            candidates.append(_combine(f, hom.basis, coeffs))
    for a, b in candidates:
        if (a.size == 0 or f.is_invertible(a)) and (b.size == 0 or f.is_invertible(b)):
            return True
    return False


# ---------------------------------------------------------------------------
# covering-theory side


def _components(vertices: set, n: int) -> list[set]:
    seen: set = set()
    out = []
    for start in sorted(vertices):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            w = stack.pop()
            for label in range(1, n + 1):
                u = step(w, label)
                if u in vertices and u not in comp:
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        out.append(comp)
    return out


def hom_dim_via_overlaps(first: LabeledSubtree, second: LabeledSubtree) -> int:
    """dim Hom(pushdown(first), pushdown(second)) from the subtrees alone.

    Sum over deck alignments ``g`` of the number of components ``C`` of
    ``first & g.second`` that are closed under predecessors in ``first`` and
    under successors in ``g.second``.
    """
    if first.n != second.n:
        raise FieldMismatchError("subtrees live in covers of different quivers")
    n = first.n
    total = 0
    for g in overlap_alignments(first, second):
        moved = translate(second, g).vertices
        common = first.vertices & moved
        for comp in _components(common, n):
            ok = True
            for w in comp:
                sink = not len(w) % 2
                home, other = (first.vertices, moved) if sink else (moved, first.vertices)
                # sinks: incoming edges of first must survive; sources: outgoing edges of g.second
                for label in range(1, n + 1):
                    u = step(w, label)
                    if u in home and u not in other:
                        ok = False
                        break
                if not ok:
                    break
            total += ok
    return total


def iso_cover_thin(first: LabeledSubtree, second: LabeledSubtree) -> bool:
    """Push-downs are isomorphic iff the subtrees are deck translates."""
    return first.n == second.n and canonical_code(first) == canonical_code(second)


# ---------------------------------------------------------------------------
# serialization


def module_to_dict(module: KroneckerModule) -> dict:
    f = module.field
    out = {
        "n": module.n,
        "dim": [module.dim.x, module.dim.y],
        "field": f.name,
        "matrices": [f.to_int_list(m) for m in module.matrices],
        "nonzeros": module.nonzeros,
    }
    if module.basis_tags is not None:
        out["basisTags"] = {
            "cols": [format_word(w) for w in module.basis_tags["cols"]],
            "rows": [format_word(w) for w in module.basis_tags["rows"]],
        }
    return out


def _parse_word(text: str) -> Word:
    return () if text == "e" else tuple(int(p) for p in text.split("."))


def module_from_dict(data: dict) -> KroneckerModule:
    f = parse_field(data["field"])
    n = int(data["n"])
    x, y = (int(v) for v in data["dim"])
    tags = None
    if "basisTags" in data:
        tags = {k: [_parse_word(w) for w in data["basisTags"][k]] for k in ("cols", "rows")}
    module = KroneckerModule.from_lists(n, f, (x, y), data["matrices"], tags)
    if "nonzeros" in data and int(data["nonzeros"]) != module.nonzeros:
        raise DomainError(f"nonzeros field says {data['nonzeros']}, matrices have {module.nonzeros}")
    return module


def module_to_json(module: KroneckerModule, indent: int | None = 2) -> str:
    return json.dumps(module_to_dict(module), indent=indent, ensure_ascii=False)


def coefficient_quiver_dot(module: KroneckerModule, name: str = "coefficient_quiver") -> str:
    x, y = module.dim
    tags = module.basis_tags
    lines = [f"digraph {name} {{"]
    for j in range(x):
        tag = f" {format_word(tags['cols'][j])}" if tags else ""
        lines.append(f'  c{j} [shape=box, label="1:{j}{tag}"];')
    for i in range(y):
        tag = f" {format_word(tags['rows'][i])}" if tags else ""
        lines.append(f'  r{i} [shape=circle, label="2:{i}{tag}"];')
    for label, m in enumerate(module.matrices, start=1):
        for i, j in zip(*np.nonzero(m != 0)):
            value = module.field.to_int_list(m[i : i + 1, j : j + 1])[0][0]
            extra = "" if value == 1 else f" ({value})"
            lines.append(f'  c{j} -> r{i} [label="α{label}{extra}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

