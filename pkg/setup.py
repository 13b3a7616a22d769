"""Build script: compiles the optional Cython acceleration module.

The package is fully functional without the extension; ``mublab.kernels``
falls back to pure-Python implementations when ``mublab._accel`` is absent.
"""
import os

from setuptools import setup

ext_modules = []
if os.environ.get("MUBLAB_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/mublab/_accel.pyx"],
            language_level=3,
        )
    except Exception as exc:  # pragma: no cover - build-environment dependent
        print(f"mublab: skipping Cython extension ({exc}); pure-Python kernels will be used")

setup(ext_modules=ext_modules)
