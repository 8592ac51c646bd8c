import logging
from functools import lru_cache
from pathlib import Path
from typing import Dict

import yaml

from util.models import Citation

# Configure logging
logger = logging.getLogger("k3.baselocus")

CITATIONS_PATH = Path(__file__).resolve().parent.parent / "resources" / "citations.yaml"


@lru_cache(maxsize=1)
def load_manifest() -> Dict[str, str]:
    """Load the bundled citations manifest, statement id -> quote"""
    with open(CITATIONS_PATH, encoding="utf-8") as handle:
        manifest = yaml.safe_load(handle)
    logger.debug(f"Loaded {len(manifest)} citations from {CITATIONS_PATH}")
    return manifest


def cite(statement: str) -> Citation:
    """Build a citation; unknown statement ids are a programming error"""
    manifest = load_manifest()
    if statement not in manifest:
        raise KeyError(f"statement {statement!r} is not in the citations manifest")
    return Citation(statement=statement, quote=manifest[statement])
