"""Driven two-level sweeps: exact evolution, adaptive oracle, asymptotics."""

try:
    from ._lzbound import *  # noqa: F401,F403  (installed wheel layout)
except ImportError:
    from _lzbound import *  # noqa: F401,F403  (in-tree build on PYTHONPATH)
