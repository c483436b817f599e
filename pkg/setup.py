"""Build script: compiles the optional fast kernels.

The compiled extension is a pure accelerator; the package runs on the numpy
fallback if compilation is skipped (KHARIBOUND_NO_EXT=1) or unavailable.
-ffp-contract=off keeps the C arithmetic bit-identical to the numpy
fallback so both backends produce the same witnesses.
"""
import os

from setuptools import setup

ext_modules = []
if os.environ.get("KHARIBOUND_NO_EXT") != "1":
    try:
        import numpy
        from Cython.Build import cythonize
        from setuptools.extension import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "kharibound._kernels",
                    ["src/kharibound/_kernels.pyx"],
                    include_dirs=[numpy.get_include()],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                    extra_compile_args=["-O3", "-ffp-contract=off"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
