import re
from pathlib import Path

import pytest

from util.citations import cite, load_manifest

SRC = Path(__file__).resolve().parents[2] / "src"


def test_manifest_loads():
    manifest = load_manifest()
    assert "nef_cones" in manifest
    assert all(isinstance(quote, str) and quote for quote in manifest.values())


def test_cite_returns_verbatim_quote():
    citation = cite("nef_cones")
    assert citation.quote == load_manifest()["nef_cones"]


def test_unknown_statement():
    with pytest.raises(KeyError):
        cite("no_such_statement")


def test_every_cited_statement_exists():
    manifest = load_manifest()
    cited = set()
    for path in SRC.rglob("*.py"):
        cited.update(re.findall(r'cite\("([a-z0-9_]+)"\)', path.read_text(encoding="utf-8")))
    assert cited
    assert cited <= set(manifest)
