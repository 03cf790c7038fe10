"""Build script: compiles the optional native kernel extension when Cython is available.

The package is fully functional without the extension; ``chshbounds._kernels``
falls back to the pure-Python kernels at import time.  Set CHSHBOUNDS_NO_EXT=1
to skip the compile step entirely.
"""

import os

from setuptools import Extension, setup

# The native backend must match the pure-Python kernels bit for bit, so the
# compiler may not fuse libm calls (gcc otherwise combines cos+sin into
# glibc's sincos, which can differ in the last ulp) or contract
# multiply-adds into FMA.
_STRICT_FP_FLAGS = [
    "-fno-builtin-sin",
    "-fno-builtin-cos",
    "-ffp-contract=off",
]

ext_modules = []
if os.environ.get("CHSHBOUNDS_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "chshbounds._kernels._native",
                    ["src/chshbounds/_kernels/_native.pyx"],
                    extra_compile_args=_STRICT_FP_FLAGS,
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
