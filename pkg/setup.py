from setuptools import setup
from setuptools.extension import Extension

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    extensions = cythonize(
        [Extension("untangle._speedups", ["src/untangle/_speedups.pyx"])],
        compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
    )
else:
    # Pure-Python install; untangle.kernels falls back to untangle._pykernels.
    extensions = []

setup(ext_modules=extensions)
