"""Python front end for the grestrict C++ core.

Every call returns parsed JSON. Input problems raise ``InputError``, an
exhausted completion search raises ``SearchExhausted``.
"""

import json
import os

from . import _core

__version__ = _core.__version__

__all__ = [
    "InputError",
    "SearchExhausted",
    "NotLocallyL",
    "classify",
    "construct",
    "verify",
    "report",
    "group_order",
]


class InputError(ValueError):
    pass


class SearchExhausted(RuntimeError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotLocallyL(RuntimeError):
    pass


def _unpack(result):
    code, out, err = result
    if code == 0:
        return json.loads(out)
    if code == 2:
        raise InputError(err.strip())
    if code == 3:
        raise SearchExhausted(err.strip(), json.loads(out) if out else None)
    if code == 1 and out:
        return json.loads(out)
    raise RuntimeError(err.strip())


def classify(spec):
    """Verdict, orbits and stabiliser orders for a group spec string."""
    return _unpack(_core.classify(spec))


def construct(spec, n, seed=0, out_dir=None, max_vertices=None):
    """Certificate for the locally-L pair with |G_v| = |L||L_w1|^n."""
    if out_dir is not None:
        out_dir = os.fspath(out_dir)
    return _unpack(_core.construct(spec, n, seed, out_dir, max_vertices))


def verify(graph_text, group, local, graph_path="graph.edges"):
    """Locally-L certificate. The ``locally_L`` field carries the verdict."""
    return _unpack(_core.verify(graph_path, graph_text, group, local))


def report(spec, n_from, n_to, seed=0):
    """Growth table as a dict with a ``rows`` list."""
    return _unpack(_core.report(spec, n_from, n_to, seed))


def group_order(spec):
    return int(_core.group_order(spec))
