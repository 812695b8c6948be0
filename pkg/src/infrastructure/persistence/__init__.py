"""
Módulo de persistência.
"""

from src.infrastructure.persistence.tsv_report import (
    TSV_HEADER,
    TsvReportWriter,
    render_certificate,
    render_summary,
)

__all__ = [
    "TSV_HEADER",
    "TsvReportWriter",
    "render_certificate",
    "render_summary",
]
