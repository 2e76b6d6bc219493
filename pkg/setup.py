from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("dortho._kernels", ["src/dortho/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # Pure-Python fallback in dortho._kernels_py keeps the package usable
    # without a compiler toolchain.
    ext_modules = []

setup(ext_modules=ext_modules)
