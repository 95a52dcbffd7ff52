from biquandle import knots, reproduce
from biquandle.cli import main


def test_report_format():
    checks = [reproduce.Check("a", True), reproduce.Check("b", False, ["x differs"])]
    assert reproduce.report(checks) == "PASS a\nFAIL b\n  x differs\n1/2 checks passed\n"


def test_passing_checks():
    assert reproduce.check_constant_counts().passed
    table2 = reproduce.hom_table2()
    assert table2 == [[27, 9, 3], [9, 7, 3], [3, 3, 9]]


def test_quandle_columns_match_for_every_knot():
    # the multiset half of the knot rows does not match, but the quandle column does
    for check in (reproduce.check_classical_knots(), reproduce.check_virtual_knots()):
        assert not any("quandle count" in d for d in check.details)


def test_reproduce_is_byte_identical(capsys):
    main(["reproduce"])
    first = capsys.readouterr().out
    main(["reproduce"])
    assert capsys.readouterr().out == first


def test_reproduce_exit_code_reflects_failures(capsys):
    passed = all(c.passed for c in reproduce.run_all())
    assert main(["reproduce"]) == (0 if passed else 1)


def test_tampered_fixture_shows_diff(monkeypatch, capsys):
    original = knots._fixture_text()
    trefoil = original.split("3_1:")[1].splitlines()[0].strip()
    lines = [f"6_2: {trefoil}" if line.startswith("6_2:") else line for line in original.splitlines()]
    monkeypatch.setattr(knots, "_fixture_text", lambda: "\n".join(lines))
    assert main(["reproduce"]) == 1
    assert "6_2: quandle count expected 4, got 16" in capsys.readouterr().out
