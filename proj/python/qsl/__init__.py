"""Quantum speed limit toolkit: minimal evolution times to a target angle."""

try:
    from ._qsl import *  # noqa: F401,F403  (installed layout: extension inside the package)
    from . import _qsl as _impl
except ImportError:  # pragma: no cover - development layout, extension on sys.path
    from _qsl import *  # noqa: F401,F403
    import _qsl as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
__version__ = "0.1.0"
