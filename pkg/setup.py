"""Build shim: compiles the optional speedup extension when Cython is present.

The package is fully functional without the extension; minshift.kernels
falls back to the pure-Python implementations in that case.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("minshift._kernels", ["src/minshift/_kernels.pyx"])],
        language_level=3,
    )
except Exception:
    pass

setup(ext_modules=ext_modules)
