"""Build script for the optional branch-and-bound speedup extension.

The package is fully functional without the extension: tricover._native
falls back to the pure-Python kernels when the compiled module is missing.
Set TRICOVER_NO_EXT=1 to skip compilation entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("TRICOVER_NO_EXT", "") in ("", "0"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("tricover._speedups", ["src/tricover/_speedups.pyx"])],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
