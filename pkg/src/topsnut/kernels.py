"""Backend selection for the search kernels.

The compiled extension ``topsnut._speed`` is preferred when it was built;
``TOPSNUT_BACKEND=pure`` forces the pure-Python fallback and
``TOPSNUT_BACKEND=c`` insists on the extension (ImportError when missing).
Both backends implement identical algorithms with identical orderings.
"""

import os

from . import _pure

_choice = os.environ.get("TOPSNUT_BACKEND", "auto").lower()

if _choice == "pure":
    _impl = _pure
elif _choice == "c":
    from . import _speed as _impl  # noqa: F401
else:
    try:
        from . import _speed as _impl
    except ImportError:
        _impl = _pure

BACKEND_NAME = _impl.BACKEND_NAME
MODE_GRACEFUL = _pure.MODE_GRACEFUL
MODE_ODD = _pure.MODE_ODD
MODE_TWIN = _pure.MODE_TWIN

label_search = _impl.label_search
coloring_search = _impl.coloring_search
canonical_form = _impl.canonical_form


def available_backends():
    """Names of the importable kernel backends."""
    names = ["pure"]
    try:
        from . import _speed  # noqa: F401

        names.append("c")
    except ImportError:
        pass
    return names
