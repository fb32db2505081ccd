"""Build hook for the optional C accelerator.

The package is pure Python; ``textfract._speedups`` is a Cython module that
speeds up the per-character scan kernels. If Cython or a C compiler is missing
the build falls back to the pure wheel and the package selects the Python
kernels at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/textfract/_speedups.pyx"],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
