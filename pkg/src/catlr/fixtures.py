"""Bundled datasets.

``bullets.csv`` holds the aggregated tally of a published black-box
firearm-examiner (bullet comparison) study and is the end-to-end fixture:
its LR table is fully derivable from the counts.

The summary and appendix files store *published display values* for five
further study families (bloodstain patterns, handwriting, footwear,
cartridge cases, latent fingerprints).  Their underlying counts are not
available here, so they serve as formatting-regression data only — never
as inputs to the LR engine.
"""

from __future__ import annotations

from importlib.resources import files

from .ingest import parse_aggregated
from .model import ConfusionTable, DataError
from .report import read_display_fixture

APPENDIX_STUDIES = ("bloodstain", "handwriting", "footwear", "cartridge", "fingerprint")


def _read(*parts: str) -> str:
    node = files("catlr").joinpath("data")
    for part in parts:
        node = node.joinpath(part)
    return node.read_text(encoding="utf-8")


def bullets_csv() -> str:
    """Raw text of the bundled aggregated bullet-study table."""
    return _read("bullets.csv")


def bullets_table() -> ConfusionTable:
    return parse_aggregated(bullets_csv(), study_name="bullets")


def published_summary() -> tuple[tuple[str, ...], list[tuple[str, ...]]]:
    """(headers, rows) of published identification/exclusion display values."""
    return read_display_fixture(_read("summary_published.csv"))


def appendix_table(study: str) -> tuple[tuple[str, ...], list[tuple[str, ...]]]:
    """(headers, rows) of one study's published per-statement display values."""
    if study not in APPENDIX_STUDIES:
        raise DataError(f"unknown appendix study {study!r}; have {APPENDIX_STUDIES}")
    return read_display_fixture(_read("appendix", f"{study}.csv"))
