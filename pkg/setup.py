import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("BRAUERKIT_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("brauerkit._compose_c", ["src/brauerkit/_compose_c.pyx"])],
            language_level="3",
        )
    except ImportError:
        # No Cython: the pure-Python kernel is selected at import time.
        ext_modules = []

setup(ext_modules=ext_modules)
