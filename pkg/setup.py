from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("lucasfrob._fastkern", ["src/lucasfrob/_fastkern.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # Pure-Python fallback kernels are selected at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
