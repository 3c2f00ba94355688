import pytest

from src.utils.errors import InputError
from src.utils.reporting import summarize
from src.verification import SUITES, run_suite

SMALL_OPTIONS = {
    "involution": {"samples": 50},
    "commutation": {"samples": 50},
    "dynkin": {"max_rank": 7},
    "crown": {"max_vertices": 7},
    "plucker": {"family": "A", "n": 3},
    "exceptional": {"max_rank": 8},
}


def _check(name, options=None):
    report = run_suite(name, options or SMALL_OPTIONS.get(name))
    assert report.passed, report.counterexample
    assert report.counterexample is None
    assert len(report.rows) > 0
    return report


def test_involution_suite():
    _check("involution")


def test_commutation_suite():
    _check("commutation")


def test_dynkin_suite():
    report = _check("dynkin")
    assert set(report.rows["group"]) == {"dynkin", "extended", "cycle"}


def test_crown_suite():
    _check("crown")


def test_counts_suite():
    _check("counts")


def test_loops_suite():
    report = _check("loops")
    assert report.rows["cycle"].all()


def test_denominators_suite():
    _check("denominators")


def test_positivity_suite():
    report = _check("positivity")
    assert set(report.rows["coefficients"]) == {"trivial", "special"}


def test_plucker_suite():
    _check("plucker")
    _check("plucker", {"family": "C", "n": 4})


def test_orders_suite():
    _check("orders")


def test_exceptional_suite():
    _check("exceptional")


def test_coherence_suite():
    _check("coherence")


def test_every_suite_is_covered():
    tested = {name[len("test_"):-len("_suite")] for name in globals() if name.endswith("_suite")}
    assert tested == set(SUITES)


def test_unknown_suite_name():
    with pytest.raises(InputError):
        run_suite("nosuchsuite")


def test_summary_per_type():
    report = _check("loops", {"type": "A3"})
    summary = summarize(report.rows, "type")
    assert list(summary["type"]) == ["A3"]
    assert int(summary["failed"].iloc[0]) == 0
    assert int(summary["rows"].iloc[0]) == len(report.rows)


if __name__ == '__main__':
    tests = [(name, f) for name, f in sorted(globals().items()) if name.startswith('test_') and callable(f)]
    failed = 0
    for name, f in tests:
        try:
            f()
            print(f"  ok    {name}")
        except Exception as e:
            failed += 1
            print(f"  FAIL  {name}: {e}")
    print(f"\n{len(tests) - failed}/{len(tests)} tests passed")
