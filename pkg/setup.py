import os

from setuptools import setup

ext_modules = []
if os.environ.get("E2QES_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            ["src/e2qes/_hqr_ext.pyx"],
            compiler_directives={"language_level": "3"},
            quiet=True,
        )
        import numpy

        for ext in ext_modules:
            ext.include_dirs.append(numpy.get_include())

setup(ext_modules=ext_modules)
