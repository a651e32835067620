"""The ten acceptance criteria, each run at exact (zero) tolerance.

Every criterion maps to one or more named checks in ``asreg.verify``; a
criterion passes only when all of its checks report ``pass``.  A one-line
verdict per criterion is printed in the terminal summary.
"""

import pytest

from asreg.verify import CRITERIA, run_check


@pytest.mark.parametrize("criterion", sorted(CRITERIA))
def test_criterion(criterion, acceptance_log):
    results = [run_check(cid) for cid in CRITERIA[criterion]]
    bad = [r for r in results if r.status != "pass"]
    names = ", ".join(f"{r.id}={r.status}" for r in results)
    acceptance_log[criterion] = (not bad, names)
    assert not bad, {r.id: r.evidence for r in bad}
