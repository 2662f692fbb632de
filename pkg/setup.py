"""Build script for the optional compiled evaluation kernels.

The package is fully functional without the extension; ballgen.kernels
falls back to the numpy implementation when the compiled module is
missing (see benchmarks/bench_kernels.py for the speed difference).
"""

from setuptools import setup

try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/ballgen/_poly_kernels.pyx"],
        compiler_directives={"language_level": "3"},
    )
    include_dirs = [numpy.get_include()]
except Exception:  # pragma: no cover - build hosts without Cython
    ext_modules = []
    include_dirs = []

setup(ext_modules=ext_modules, include_dirs=include_dirs)
