"""Build script: compiles the elimination kernel when Cython is available.

Set PROJLIE_NO_EXT=1 to force a pure-Python install (the package falls back
to projlie._elim_py at import time either way).
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("PROJLIE_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("projlie._elim", ["src/projlie/_elim.pyx"])],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
