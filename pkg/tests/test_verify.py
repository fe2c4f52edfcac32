import json

import pytest

from kronrep.cover import canonical_code
from kronrep.errors import BudgetExceededError
from kronrep.linalg import F2
from kronrep.roots import imaginary_roots
from kronrep.verify import construction_family, verify_root, verify_theorem_window


def test_family_sizes():
    assert len(construction_family(3, 2, 5)) == 3
    assert len(construction_family(4, 2, 3)) >= 6
    fam = construction_family(3, 3, 4)
    codes = [canonical_code(t) for t in fam]
    assert codes == sorted(set(codes))


def test_verify_root_fields():
    r = verify_root(3, 2, 3)
    assert r.status == "witnessed" and r.class_count >= 3
    for m in r.modules:
        assert set(m.verdicts) == {"F2", "F3"}
        assert m.ok and m.nonzeros == 4


def test_outside_region_is_reported():
    r = verify_root(3, 4, 10, fields=(F2,))
    assert r.status == "outside-cover-thin"
    assert r.fundamental_representative == (2, 2) and r.coxeter_power == -1


def test_window_n2():
    rep = verify_theorem_window(2, 8)
    assert rep.passed
    assert [r.root for r in rep.roots] == [(m, m) for m in range(1, 5)]
    assert all(r.class_count == 2 for r in rep.roots)
    json.dumps(rep.to_dict())


def test_window_fails_past_the_region():
    rep = verify_theorem_window(3, 14, fields=(F2,), budget=14, matrix_iso_check=False)
    assert not rep.passed and rep.counterexamples == []
    outside = [r.root for r in rep.roots if r.status == "outside-cover-thin"]
    assert outside == [(4, 10), (10, 4)]
    assert len(rep.roots) == len(imaginary_roots(3, 14))


def test_budget_guard():
    with pytest.raises(BudgetExceededError):
        verify_theorem_window(3, 13)
