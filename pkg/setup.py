import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install
    cythonize = None

ext_modules = []
if cythonize is not None and not os.environ.get("HIBICX_NO_EXT"):
    ext_modules = cythonize(
        [Extension("hibicx._ckernels", ["src/hibicx/_ckernels.pyx"])],
        compiler_directives={"language_level": 3},
    )

setup(ext_modules=ext_modules)
