"""Builds the optional compiled lexer/LCS kernels.

The package works without them (pure-Python fallbacks are selected at
import time), so the extension is marked optional and any build failure
is non-fatal.
"""
from setuptools import setup
from setuptools.extension import Extension

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "mpiassist._speedups",
                ["src/mpiassist/_speedups.pyx"],
                extra_compile_args=["-O2"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": 3},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
