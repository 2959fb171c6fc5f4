"""Uniquely labelled geodesics on Coxeter diagrams (C++ core bindings)."""

import importlib

try:  # wheel layout: extension lives inside the package
    _impl = importlib.import_module("._ulgcox", __name__)
except ImportError:  # in-tree build: extension on sys.path
    _impl = importlib.import_module("_ulgcox")

_names = [name for name in dir(_impl) if not name.startswith("_")]
globals().update({name: getattr(_impl, name) for name in _names})
__all__ = _names
