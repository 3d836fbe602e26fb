import os

from setuptools import Extension, setup

# CYCLOTOMY_NO_EXT=1 installs the pure-Python package only.
ext_modules = []
if not os.environ.get("CYCLOTOMY_NO_EXT"):
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("cyclotomy._kernels", ["src/cyclotomy/_kernels.pyx"],
                   extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
