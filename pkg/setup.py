"""Build shim for the optional compiled simplex core.

The package works without the extension (expdom.lp falls back to its numpy
pivot loop); building it just makes branch-and-bound several times faster.
"""

import warnings

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "expdom._simplex_core",
                ["src/expdom/_simplex_core.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:  # pragma: no cover
    warnings.warn("Cython not available; installing without the compiled simplex core")
    ext_modules = []

setup(ext_modules=ext_modules)
