"""Build the optional compiled kernel.  The package works without it
(pure-Python fallback selected at import)."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    ext_modules = cythonize(
        ["src/rayweave/_ckernel.pyx"],
        compiler_directives={"language_level": 3},
    )
except ImportError:
    print("Cython not available; building rayweave without the compiled kernel")

setup(ext_modules=ext_modules)
