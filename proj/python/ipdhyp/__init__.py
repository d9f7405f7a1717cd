"""Miller-Paris transformations of IPD hypergeometric functions.

Complex inputs may be Python numbers or "re+imi" strings. Results are decoded
JSON; complex values inside them are [re, im] pairs of decimal strings, which
`to_complex` converts to Python complex numbers.
"""

import json

from ._ipdhyp import IpdError, digits, identities, set_digits
from . import _ipdhyp

__all__ = [
    "IpdError",
    "charpoly",
    "cli",
    "digits",
    "eval_pfq",
    "identities",
    "sample_params",
    "set_digits",
    "to_complex",
    "transform",
    "verify",
]


def _text(z):
    if isinstance(z, str):
        return z
    z = complex(z)
    return f"{z.real!r}{z.imag:+}i".replace("+-", "-")


def _params(params):
    return params if isinstance(params, str) else json.dumps(params)


def to_complex(pair):
    """[re, im] decimal strings to a Python complex."""
    return complex(float(pair[0]), float(pair[1]))


def eval_pfq(num, den, x, tol=None):
    """pFq(num; den; x) with its truncation diagnostics."""
    out = _ipdhyp.eval_pfq([_text(a) for a in num], [_text(b) for b in den], _text(x),
                           None if tol is None else str(tol))
    return json.loads(out)


def transform(theorem, params, route="", x=None):
    """Right-hand side of a transformation; with `x`, both sides and the residual."""
    out = _ipdhyp.transform(theorem, _params(params), route, None if x is None else _text(x))
    return json.loads(out)


def charpoly(which, params, route=""):
    """Coefficients and roots of a characteristic polynomial."""
    return json.loads(_ipdhyp.charpoly(which, _params(params), route))


def verify(ids=None, seed=20190513, count=0, tol=None, wall_time=True):
    """Runs the verification suite and returns the report."""
    out = _ipdhyp.verify(None if ids is None else list(ids), seed, count,
                         None if tol is None else str(tol), wall_time)
    return json.loads(out)


def sample_params(identity, seed, count):
    return json.loads(_ipdhyp.sample_params(identity, seed, count))


def cli(*args):
    """Runs the command line; returns (exit code, stdout, stderr)."""
    return _ipdhyp.cli([str(a) for a in args])
