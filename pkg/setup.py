"""Build script for the optional compiled triangle kernel.

The package works without the extension (a pure-Python kernel is selected
at import time), so a failed Cython build is tolerated.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "graphtempo._fast_tri",
                ["src/graphtempo/_fast_tri.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
