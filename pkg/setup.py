import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("HECKE_GRAPHS_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("hecke_graphs._ckernels", ["src/hecke_graphs/_ckernels.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
