import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("KSPT_SKIP_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext = Extension(
            "kspt._scan",
            ["src/kspt/_scan.pyx"],
            optional=True,
        )
        ext_modules = cythonize([ext], language_level=3)
    except ImportError:
        # no Cython: install the pure-Python package, the numpy scan
        # lane takes over at import time
        ext_modules = []

setup(ext_modules=ext_modules)
