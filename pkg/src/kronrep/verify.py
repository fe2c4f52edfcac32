"""Mechanical check of the tree-module bound over a window of imaginary roots.

For each positive imaginary root ``(x, y)`` the cover-thin construction is run
under every relabelling of the arrows (dualized when ``x > y``); the distinct
deck classes are pushed down and each push-down is checked to be a tree
module and indecomposable over every requested field.  Distinct classes are
also checked pairwise non-isomorphic through Hom spaces.
"""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass, field

from .cover import canonical_code, cover_thin_tree, resolve_budget
from .errors import BudgetExceededError
from .linalg import F2, F3, FieldSpec
from .representation import (
    DEFAULT_SEED,
    Verdict,
    coefficient_quiver_report,
    end_is_local,
    modules_isomorphic,
    pushdown,
)
from .roots import check_index, cover_thin_exists, imaginary_roots, reduce_to_fundamental_domain, tits_form

__all__ = ["ModuleCheck", "RootReport", "WindowReport", "construction_family", "verify_root", "verify_theorem_window"]


@dataclass
class ModuleCheck:
    code: str
    nonzeros: int
    tree_presentation: bool
    verdicts: dict  # field name -> Verdict value
    end_dims: dict  # field name -> dim End

    @property
    def ok(self) -> bool:
        return self.tree_presentation and all(v == Verdict.INDECOMPOSABLE.value for v in self.verdicts.values())


@dataclass
class RootReport:
    root: tuple
    q: int
    # "witnessed", "counterexample" or "outside-cover-thin"
    status: str
    required: int
    class_count: int = 0
    pairwise_distinct: bool = True
    modules: list = field(default_factory=list)
    fundamental_representative: tuple | None = None
    coxeter_power: int | None = None


@dataclass
class WindowReport:
    n: int
    max_total: int
    fields: list
    roots: list

    @property
    def passed(self) -> bool:
        return all(r.status == "witnessed" for r in self.roots)

    @property
    def counterexamples(self) -> list:
        return [r.root for r in self.roots if r.status == "counterexample"]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "max_total": self.max_total,
            "fields": self.fields,
            "passed": self.passed,
            "counterexamples": [list(r) for r in self.counterexamples],
            "roots": [asdict(r) for r in self.roots],
        }


def construction_family(n: int, x: int, y: int) -> list:
    """Distinct deck classes among all relabelled constructions, sorted by code."""
    family = {}
    for sigma in itertools.permutations(range(1, n + 1)):
        tree = cover_thin_tree(n, x, y, perm=sigma)
        family.setdefault(canonical_code(tree), tree)
    return [family[c] for c in sorted(family)]


def verify_root(
    n: int,
    x: int,
    y: int,
    fields: tuple[FieldSpec, ...] = (F2, F3),
    seed: int = DEFAULT_SEED,
    matrix_iso_check: bool = True,
) -> RootReport:
    q = tits_form(n, (x, y))
    report = RootReport((x, y), q, "witnessed", required=n)
    if not cover_thin_exists(n, (x, y)):
        report.status = "outside-cover-thin"
        rep, power = reduce_to_fundamental_domain(n, (x, y))
        report.fundamental_representative = tuple(rep)
        report.coxeter_power = power
        return report
    trees = construction_family(n, x, y)
    report.class_count = len(trees)
    per_field = {f.name: [pushdown(t, f) for t in trees] for f in fields}
    for i, tree in enumerate(trees):
        first = per_field[fields[0].name][i]
        cq = coefficient_quiver_report(first)
        verdicts, end_dims = {}, {}
        for f in fields:
            res = end_is_local(per_field[f.name][i], seed=seed)
            verdicts[f.name] = res.verdict.value
            end_dims[f.name] = res.end_dim
        report.modules.append(
            ModuleCheck(
                canonical_code(tree).decode(),
                cq.total_nonzeros,
                cq.is_tree_presentation and cq.total_nonzeros == x + y - 1,
                verdicts,
                end_dims,
            )
        )
    if matrix_iso_check:
        mods = per_field[fields[0].name]
        report.pairwise_distinct = not any(
            modules_isomorphic(a, b, seed=seed) for a, b in itertools.combinations(mods, 2)
        )
    if report.class_count < n or not report.pairwise_distinct or not all(m.ok for m in report.modules):
        report.status = "counterexample"
    return report


def verify_theorem_window(
    n: int,
    max_total: int,
    fields: tuple[FieldSpec, ...] = (F2, F3),
    seed: int = DEFAULT_SEED,
    budget: int | None = None,
    matrix_iso_check: bool = True,
) -> WindowReport:
    """Check every positive imaginary root with ``x + y <= max_total``.

    Roots outside the cover-thin region are reported with status
    ``outside-cover-thin`` together with their Coxeter representative in the
    fundamental domain; they make the window fail, since no cover-thin
    witness exists for them.
    """
    n = check_index(n)
    budget = resolve_budget(budget)
    if max_total > budget:
        raise BudgetExceededError(max_total, budget)
    roots = [
        verify_root(n, v.x, v.y, fields=fields, seed=seed, matrix_iso_check=matrix_iso_check)
        for v in imaginary_roots(n, max_total)
    ]
    return WindowReport(n, max_total, [f.name for f in fields], roots)
