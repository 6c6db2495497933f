import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("WSH_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "wsh._poly._speedups",
                    ["src/wsh/_poly/_speedups.pyx"],
                    optional=True,
                )
            ],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
