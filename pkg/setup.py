"""Builds the optional compiled kernels; the package still works without them."""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("TOUGHCYCLES_PURE") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("toughcycles._ckernels", ["src/toughcycles/_ckernels.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
