# The Cython kernels are optional: if cythonize or the C compiler is
# unavailable the package installs with the pure-Python kernels only.
from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [Extension("dblcat._ckernels", ["src/dblcat/_ckernels.pyx"], optional=True)],
        compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
    )

setup(ext_modules=ext_modules)
