from pqosc import CheckEntry, CheckReport


def test_pass_iff_residual_within_tol():
    assert CheckEntry("x", 1e-12, 1e-10).passed
    assert CheckEntry("x", 1e-10, 1e-10).passed
    assert not CheckEntry("x", 2e-10, 1e-10).passed


def test_report_aggregates():
    report = CheckReport(
        "demo",
        (CheckEntry("one", 0.0, 1e-10), CheckEntry("two", 5e-11, 1e-10)),
        {"dim": 4},
    )
    assert report.passed
    assert report.max_residual() == 5e-11
    assert report.entry("two").residual == 5e-11


def test_json_round_trip():
    report = CheckReport(
        "demo",
        (CheckEntry("one", 1.2345678901234567e-11, 1e-10),),
        {"params": {"p": 2.0, "q": 3.0}, "mode": "grading"},
    )
    again = CheckReport.from_json(report.to_json())
    assert again == report
