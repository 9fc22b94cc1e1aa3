from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = [
    Extension(
        "picard_lpoly._kernels_c",
        sources=["src/picard_lpoly/_kernels_c.pyx"],
        extra_compile_args=["-O3"],
    )
]

if cythonize is not None:
    ext_modules = cythonize(extensions, language_level=3)
else:
    # Source tree without Cython: install pure Python only, the package
    # falls back to the interpreted kernels at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
