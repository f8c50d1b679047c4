from setuptools import setup, Extension

import numpy as np

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "legode._kernels",
                sources=["src/legode/_kernels.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    # Source distribution without Cython: the package falls back to the
    # pure-numpy kernels at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
