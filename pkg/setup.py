import os

from setuptools import setup

ext_modules = []
if os.environ.get("EKRLAB_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/ekrlab/_bb.pyx"],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        # Pure-Python kernel (_bb_py) is selected at import when the
        # extension is unavailable.
        ext_modules = []

setup(ext_modules=ext_modules)
