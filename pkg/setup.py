"""Build the optional compiled kernels.

Without Cython or a C compiler the package still installs; the
pure-Python kernels are used instead.
"""
import os

from setuptools import Extension, setup


def _extensions():
    if os.environ.get("YAMABE_BOUNDS_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "yamabe_bounds._kernels_c",
        ["src/yamabe_bounds/_kernels_c.pyx"],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=_extensions())
