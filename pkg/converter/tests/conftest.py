from pathlib import Path

import pytest


@pytest.fixture(scope="session")
def cora_out(tmp_path_factory):
    """One shared conversion of cora; tests treat it as read-only."""
    from planetoid_convert import convert

    raw = Path(__file__).resolve().parents[2] / "data" / "raw" / "cora"
    if not raw.is_dir():
        pytest.skip("raw cora bundle not present")
    out = tmp_path_factory.mktemp("conv") / "cora"
    report = convert(raw, out, "cora")
    return out, report
