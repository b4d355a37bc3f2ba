"""Report plumbing only; the full claim run is exercised by the CLI tests."""

from spreadcodes.reproduce import FAMILY_RANGES, ClaimResult, ReproductionReport


def test_claim_line_format():
    c = ClaimResult("some_id", "desc", "0 diffs", "0 diffs of 9", "match")
    assert c.line() == "match     some_id: expected 0 diffs; got 0 diffs of 9"


def test_report_aggregation():
    good = ClaimResult("a", "", "x", "x", "match")
    fixed = ClaimResult("b", "", "x", "y", "corrected")
    bad = ClaimResult("c", "", "x", "y", "mismatch")
    rep = ReproductionReport((good, fixed))
    assert rep.ok and rep.mismatches == 0
    assert rep.to_json()["ok"] is True
    assert rep.to_json()["schema"] == 1
    rep = ReproductionReport((good, fixed, bad))
    assert not rep.ok and rep.mismatches == 1
    assert [c["id"] for c in rep.to_json()["claims"]] == ["a", "b", "c"]


def test_family_ranges_cover_admissible_s():
    for (family, n), rng in FAMILY_RANGES.items():
        t = n // 2
        top = 3**t + 1 if family == "char" else (3**t + 1) // 2
        assert list(rng) == list(range(1, top + 1))
