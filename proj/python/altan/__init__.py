"""Altan construction, exact nullity and benzenoid surveys."""

try:
    from ._altan import *  # noqa: F401,F403
    from ._altan import __doc__  # noqa: F401
except ImportError:  # built in-tree: extension sits on sys.path, not in the package
    from _altan import *  # noqa: F401,F403
