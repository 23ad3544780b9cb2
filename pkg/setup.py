from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("qtop._ckernel", ["src/qtop/_ckernel.pyx"])],
        language_level=3,
    )
except ImportError:
    # pure-Python fallback kernel is selected at import time
    ext_modules = []

setup(ext_modules=ext_modules)
