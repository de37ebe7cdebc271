"""Gross-Stark verification toolkit over Q."""

import json

from ._gstark import *  # noqa: F401,F403
from ._gstark import __version__, run_verify as _run_verify


def verify(command, **kwargs):
    """Run a verification suite; returns (exit_code, report_dict) without timings."""
    code, text = _run_verify(command, **kwargs)
    return code, json.loads(text)
