import json
from pathlib import Path

import pytest

REPO = Path(__file__).resolve().parent.parent
CORPUS_DIR = REPO / "data" / "corpus"
FIXTURES_PATH = REPO / "data" / "fixtures.json"


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return CORPUS_DIR


@pytest.fixture(scope="session")
def corpus_sources() -> dict[str, str]:
    return {p.name: p.read_text(encoding="utf-8")
            for p in sorted(CORPUS_DIR.glob("*.py"))}


@pytest.fixture(scope="session")
def golden_fixtures() -> list[dict]:
    return json.loads(FIXTURES_PATH.read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def prepared_corpus(tmp_path_factory) -> Path:
    """Preprocessed corpus over the full bundled file set, desk-small vocab."""
    from typecomp import cli

    out = tmp_path_factory.mktemp("corpus")
    cfg = cli.resolve_config(None, {"vocab_size": "768", "block_size": "192"})
    cli.run_preprocess(CORPUS_DIR, out, cfg)
    return out
