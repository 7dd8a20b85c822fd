"""
Rendering of command results.

Text output comes from the Jinja2 templates in ``klarner/templates``; JSON and
TSV output are built from the ``to_dict()`` / ``to_tsv()`` forms of the result
objects.  Every renderer returns a string ending in a single LF.
"""

from __future__ import annotations

import json
from functools import lru_cache
from pathlib import Path
from typing import Any, Iterable, Mapping, Tuple

from jinja2 import Environment, FileSystemLoader, StrictUndefined

TEMPLATES_PATH = Path(__file__).resolve().parent.parent / "templates"


@lru_cache(maxsize=1)
def _environment() -> Environment:
    # StrictUndefined turns a missing variable into an error instead of an empty string.
    return Environment(
        loader=FileSystemLoader(str(TEMPLATES_PATH)),
        undefined=StrictUndefined,
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
    )


def render(template_name: str, **context: Any) -> str:
    """Render ``template_name`` with ``context``.

    Parameters
    ----------
    template_name : str
        File name inside ``klarner/templates``, e.g. ``"verify.txt.j2"``.
    **context
        Variables referenced by the template.

    Returns
    -------
    str
        The rendered text, LF line endings.
    """

    return _environment().get_template(template_name).render(**context)


def render_json(payload: Mapping[str, Any]) -> str:
    return json.dumps(payload, indent=2) + "\n"


def render_tsv(rows: Iterable[Tuple[Any, Any]]) -> str:
    return "".join(f"{key}\t{value}\n" for key, value in rows)
