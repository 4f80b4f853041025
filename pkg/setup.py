import ctypes.util
import os

import numpy as np
from Cython.Build import cythonize
from setuptools import Extension, setup

# libmvec (glibc) supplies the vectorized pow used on AVX2 machines; the
# choice is made again at run time, so a portable build only loses speed.
use_mvec = ctypes.util.find_library("mvec") is not None and not os.environ.get("SOCIOGROW_NO_SIMD")

setup(
    ext_modules=cythonize(
        [
            Extension(
                "sociogrow._kernels",
                ["src/sociogrow/_kernels.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")]
                + ([("SOCIOGROW_HAVE_MVEC", "1")] if use_mvec else []),
                libraries=["mvec", "m"] if use_mvec else [],
            )
        ],
        language_level=3,
    ),
)
