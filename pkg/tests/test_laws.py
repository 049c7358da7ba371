from hypothesis import given, strategies as st

from cubical.errors import FalsificationError
from cubical.laws import LawResult, Report, Sampling

import pytest


def test_exhaustive_within_budget():
    r = LawResult("x")
    tuples = list(r.over([range(3), range(4)], Sampling(budget=12)))
    assert len(tuples) == 12 and r.mode == "exhaustive" and r.seed is None


def test_sampled_beyond_budget_is_seeded():
    r1, r2 = LawResult("x"), LawResult("x")
    a = list(r1.over([range(10)] * 3, Sampling(budget=50, seed=2)))
    b = list(r2.over([range(10)] * 3, Sampling(budget=50, seed=2)))
    assert a == b and len(a) == 50
    assert (r1.mode, r1.seed) == ("sampled", 2)
    r3 = LawResult("x")
    items = r3.over_list(list(range(100)), Sampling(budget=10, seed=1))
    assert len(items) == 10 and r3.mode == "sampled"


def test_first_witness_kept():
    r = LawResult("x")
    r.check(True, 0)
    r.check(False, (1, 2))
    r.check(False, (3, 4))
    assert (r.status, r.failures, r.checked, r.witness) == ("fail", 2, 3, (1, 2))
    r2 = LawResult("y")
    r2.check(False)
    assert r2.witness == "unspecified"


def test_report():
    rep = Report("s", "i")
    rep.law("a").check(True)
    rep.law("b").skip("nothing to do")
    assert rep.ok and rep["b"].status == "skip"
    rep.law("c").check(False, [1])
    assert not rep.ok and [r.law for r in rep.failures()] == ["c"]
    with pytest.raises(FalsificationError) as exc:
        rep.raise_on_failure()
    assert exc.value.law == "c"
    again = Report.from_dict(rep.to_dict())
    assert again.to_dict() == rep.to_dict()


@given(st.lists(st.booleans(), max_size=30))
def test_counts_add_up(oks):
    r = LawResult("x")
    for i, ok in enumerate(oks):
        r.check(ok, i)
    assert r.checked == len(oks) and r.failures == oks.count(False)
    assert (r.status == "pass") == all(oks)
