"""Smoke test for the credence extension module.

Build and install first, e.g. `maturin develop` from crates/python, or copy the
cdylib next to this file as credence.so. Run with `python python/smoke_test.py`.
"""

import math
from fractions import Fraction

import credence


def main():
    one = credence.Protocol(weeks=1)
    two = credence.Protocol(weeks=2)

    assert credence.credence(one, "lewis")["total"] == Fraction(1, 2)
    assert credence.credence(one, "elga")["total"] == Fraction(1, 3)
    assert credence.credence(two, "lewis")["total"] == Fraction(5, 12)
    report = credence.credence(two, "elga")
    assert report["total"] == Fraction(1, 3)
    priors = {row["sequence"]: row["prior"] for row in report["per_sequence"]}
    assert priors == {"HH": "1/6", "HT": "1/4", "TH": "1/4", "TT": "1/3"}

    assert credence.fixed_composition_credence(2609, 5218) == Fraction(1, 3)
    sched = credence.simulate_fixed_composition(2609, 5218, seed=9)
    assert sched["frequency"] == 2609 / 7827

    stats = credence.simulate(one, trials=100_000, seed=5)
    assert abs(stats["frequency"] - 1 / 3) < 4 * stats["se"]
    assert stats == credence.simulate(one, trials=100_000, seed=5)

    ledger = credence.bet_evaluate(one, odds=2.0, trials=100_000, seed=5)
    assert ledger["mean_payoff_per_awakening"] < -4 * ledger["se"]
    assert abs(credence.break_even_search(one, seed=5)["implied_credence"] - 1 / 3) < 0.01

    h = 1 / math.sqrt(2)
    quantum = credence.Protocol.quantum(complex(h, 0), complex(0, h))
    cc = credence.centered_credences(quantum)
    assert set(cc) == {"H-Mon", "T-Mon", "T-Tue"}
    assert all(abs(v - 1 / 3) < 1e-12 for v in cc.values())

    surviving, dead = credence.roulette_measures(10, complex(h, 0))
    assert abs(surviving - 2 ** -10) < 1e-12 and abs(surviving + dead - 1) < 1e-15

    opus = credence.opus_identity_check({"five": 1 + 0j}, {"ten": 1 + 0j})
    assert opus["passed"] and opus["max_deviation"] < 1e-15

    text = two.to_json()
    assert credence.Protocol.from_json(text) == two
    try:
        credence.Protocol(p_h="3/2")
    except ValueError as e:
        assert "out of range" in str(e)
    else:
        raise AssertionError("expected ValueError")

    print("credence smoke test passed")


if __name__ == "__main__":
    main()
