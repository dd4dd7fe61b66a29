"""Exact multiparameter Schur P/Q polynomials over arbitrary-precision rationals.

Thin wrapper over the compiled ``_core`` extension. Rational values cross the
boundary as exact "p/q" strings; dimension counts come back as Python ints.
"""

try:
    from ._core import *  # noqa: F401,F403  (installed wheel layout)
    from . import _core
except ImportError:  # in-tree build: _core on sys.path next to the package
    from _core import *  # noqa: F401,F403
    import _core

from fractions import Fraction

__all__ = [name for name in dir(_core) if not name.startswith("_")] + [
    "dim",
    "as_fraction",
]


def as_fraction(text):
    """Exact rational string -> fractions.Fraction."""
    return Fraction(text)


def dim(outer, inner=(), method="paths"):
    """Number of standard shifted tableaux of the skew shape outer/inner."""
    fn = {
        "paths": _core.g_paths,
        "formula": _core.g_formula,
        "pfaffian": _core.g_pfaffian,
    }[method]
    return int(fn(list(inner), list(outer)))
