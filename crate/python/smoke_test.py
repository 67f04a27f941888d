"""Smoke test for the stablerc_py extension module.

Build and run from the repository root:

    cargo build --release -p stablerc-py --features extension-module
    cp target/release/libstablerc_py.so python/stablerc_py.so
    python3 python/smoke_test.py
"""

import json
import pathlib
import sys
from fractions import Fraction

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent))

import stablerc_py as s  # noqa: E402

ROOT = pathlib.Path(__file__).resolve().parent.parent
D8 = ROOT / "crates" / "stablerc-cli" / "tests" / "data" / "d8_initial.json"
WORKED = ROOT / "crates" / "stablerc" / "tests" / "data" / "d8_worked_instance.json"


def check_d8_round_trip():
    rc = s.RiggedConfiguration.from_json(D8.read_text())
    assert rc.family == "D1" and rc.rank == 8 and rc.kind == "vdomino"
    assert rc.weight() == [2, 2, 1]
    assert rc.validate() == []
    assert rc.stability_violations() == []
    assert rc.charge() == -35
    worked = json.loads(WORKED.read_text())
    assert [[list(r) for r in node] for node in rc.annotated()] == worked["states"][0]

    out = rc.psi()
    assert (out.lam, out.mu, out.eta) == ([2, 2, 1], [3, 3, 2, 2], [4, 3, 3, 3, 1, 1])
    assert [int(l) for l, _ in out.arrows] == worked["arrows"]
    assert out.tableau.is_lr()
    assert out.tableau.reverse_row_word() == [1, 1, 2, 3, 1, 4, 2, 2, 3, 4]
    assert out.rc.family == "A1"

    back = s.psi_inverse(out.rc, out.tableau, "D1", 8)
    assert back == rc
    assert s.RiggedConfiguration.from_json(back.to_json()) == rc


def check_constructors():
    space = [(1, 1, 2)]
    found = [rc for rc in s.enumerate_rc("D2", 3, [], space) if any(rc.annotated())]
    assert found
    for rc in found:
        rows = [[(length, rig) for length, _, rig in node] for node in rc.annotated()]
        rebuilt = s.RiggedConfiguration("D2", 3, space, rows)
        assert rebuilt == rc and rebuilt.validate([]) == []
    half = s.RiggedConfiguration("A1", 2, [], [[(Fraction(2, 1), 0)], []])
    assert half.annotated()[0][0][0] == 2
    t = s.SkewTableau([1], [2, 1], [[1], [2]])
    assert t.rows == [[1], [2]] and t.is_lr()
    try:
        s.SkewTableau([2], [1], [[]])
    except s.InvalidInputError:
        pass
    else:
        raise AssertionError("a non-containing shape must be rejected")


def check_polynomials():
    assert s.lr_coefficient([], [1], [1]) == 1
    assert s.lr_coefficient([2, 1], [2, 1], [3, 2, 1]) == 2
    b = s.qbinomial(2, 2)
    assert b.terms() == {0: 1, 1: 1, 2: 2, 3: 1, 4: 1}
    assert str(b) == "1 + q + 2q^2 + q^3 + q^4"

    m = s.fermionic("C1", 3, [1], [(1, 1, 3)])
    count = len(s.enumerate_rc("C1", 3, [1], [(1, 1, 3)]))
    assert m.at_one() == count > 0

    equal, lhs, rhs, witnesses = s.verify_identity("singlebox", [1], [(1, 1, 3)])
    assert equal and lhs == rhs and witnesses
    assert s.minimum_rank("vdomino", [2, 2, 1], [(1, 3, 3), (1, 2, 2), (1, 1, 2)]) == 15
    try:
        s.enumerate_rc("D1", 6, [], [(1, 2, 2)], max_configs=1)
    except s.BudgetExceededError:
        pass
    else:
        raise AssertionError("a budget of one configuration must be exceeded")


if __name__ == "__main__":
    check_d8_round_trip()
    check_constructors()
    check_polynomials()
    print("python smoke test: ok")
