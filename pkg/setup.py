import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("TOPSNUT_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("topsnut._speed", ["src/topsnut/_speed.pyx"])],
            language_level=3,
        )
    except ImportError:
        # No Cython: install pure-Python only, the package selects the
        # fallback backend at import time.
        ext_modules = []

setup(ext_modules=ext_modules)
