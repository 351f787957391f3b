"""Build script: compiles the traversal kernels when Cython is available.

The package works without the extension (the pure-Python backend is
selected at import time), so the build degrades gracefully instead of
failing on toolchain-less hosts.  Set SBGRAPH_PURE=1 to skip the
extension on purpose.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("SBGRAPH_PURE"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "sbgraph._kernels._ckern",
                    ["src/sbgraph/_kernels/_ckern.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
