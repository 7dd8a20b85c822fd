"""Text, JSON and TSV rendering of command results."""

from .text_report import TEMPLATES_PATH, render, render_json, render_tsv

__all__ = ["TEMPLATES_PATH", "render", "render_json", "render_tsv"]
