"""Build the optional compiled kernel.

The package works without it (a pure-Python twin is selected at import
time), so a missing compiler or Cython only costs speed, not features.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "strikeback.engine._kernel",
                ["src/strikeback/engine/_kernel.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
