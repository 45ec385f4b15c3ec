"""Every registered exact identity must hold (or fail where predicted)."""

import pytest

from qbax.identities import IDENTITIES, identity_ids


def test_registry_is_well_formed():
    assert len(IDENTITIES) == 86
    for check_id, ident in IDENTITIES.items():
        assert ident.check_id == check_id
        assert ident.claim.strip()
        assert ident.kind in ("exact-zero", "structural", "expected-failure")


def test_kind_partition():
    assert len(identity_ids("exact-zero")) == 72
    assert len(identity_ids("structural")) == 8
    assert len(identity_ids("expected-failure")) == 6
    assert len(identity_ids()) == 86


@pytest.mark.parametrize("check_id", sorted(IDENTITIES))
def test_identity_holds(check_id):
    ident = IDENTITIES[check_id]
    ok, summary = ident.fn()
    assert ok, f"{check_id}: {summary}"
    assert isinstance(summary, str) and summary


def test_negative_controls_report_the_detected_fault():
    for check_id in identity_ids("expected-failure"):
        ok, summary = IDENTITIES[check_id].fn()
        assert ok
        # the summary must say what broke, not merely that something passed
        assert any(word in summary.lower()
                   for word in ("fail", "no ", "not ", "break", "detect",
                                "flag")), (
            check_id, summary)
