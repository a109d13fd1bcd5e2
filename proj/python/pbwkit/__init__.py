"""Exact PBW checks for filtered deformations of graded algebras."""

import json

from ._pbwkit import (
    PbwkitError,
    Presentation,
    annihilator_dims,
    change_field,
    complexity,
    hilbert,
    jacobi,
    load_presentation,
    normal_form,
    parse_presentation,
    tor3,
    tor_bar,
)
from . import _pbwkit

__all__ = [
    "PbwkitError", "Presentation", "annihilator_dims", "change_field", "complexity", "hilbert",
    "jacobi", "load_presentation", "normal_form", "parse_presentation", "run", "render_text",
    "tor3", "tor_bar",
]


def _presentation(p):
    if isinstance(p, Presentation):
        return p
    if "\n" in p or "=" in p:
        return parse_presentation(p)
    return load_presentation(p)


def run(command, presentation, upto=-1):
    """Run a CLI command on a Presentation, file path or file text.

    Returns (report dict, exit code) with the same contract as the pbwkit tool.
    """
    text, code = _pbwkit.run_json(command, _presentation(presentation), upto)
    return json.loads(text), code


def render_text(report):
    return _pbwkit.render_text(json.dumps(report))
