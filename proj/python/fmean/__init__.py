"""Quasi-arithmetic f-means, conditional f-expectations, and
certainty-equivalent pricing on finite probability spaces."""

try:
    # Installed layout: the extension lives inside this package.
    from ._fmean import *  # noqa: F401,F403
    from . import _fmean as _impl
except ImportError:
    # Development layout: the extension sits on sys.path (build/python).
    from _fmean import *  # noqa: F401,F403
    import _fmean as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
__version__ = "1.0.0"
