"""Build script for the optional compiled kernel core.

The package works without the extension (a numpy fallback is selected at
import time), so the extension is marked optional: a failed compile degrades
to the pure-Python kernels instead of failing the install.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "normcontrol._kernels_cy",
                ["src/normcontrol/_kernels_cy.pyx"],
                optional=True,
            )
        ],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
