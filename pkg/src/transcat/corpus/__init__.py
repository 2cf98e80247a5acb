"""Bundled example documents."""

from pathlib import Path

CORPUS = Path(__file__).parent


def path(name: str) -> Path:
    return CORPUS / name


def files() -> list[Path]:
    return sorted(p for p in CORPUS.iterdir() if p.suffix in (".uas", ".ucat"))
