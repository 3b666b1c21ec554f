import os

from setuptools import Extension, setup

# The package works without the extension (a pure-Python fallback is selected
# at import time), so a missing Cython or failing C toolchain must not break
# the install. Set UNBORDERED_PURE=1 to skip the extension on purpose.
ext_modules = []
if os.environ.get("UNBORDERED_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "unbordered._kernels",
                    ["src/unbordered/_kernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={
                "language_level": 3,
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
