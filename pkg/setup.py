"""Build script: compiles the hot-path extension, falling back to pure python.

The package works without the extension (the numpy backend is selected at
import); building it is strongly recommended for the benchmark tables and
the acceptance fuzz suite.
"""

import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "xbarpim._speedups",
                ["src/xbarpim/_speedups.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
