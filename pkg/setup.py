from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/latticediss/words/_decider_c.pyx"],
        language_level="3",
    )
except ImportError:
    # No Cython available: the pure-Python kernel is used at import time.
    pass

setup(ext_modules=ext_modules)
