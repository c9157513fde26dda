import os

from setuptools import Extension, setup

# HYPERFACET_NO_EXT=1 skips the compiled kernels; the package then runs on
# the pure-Python fallback in hyperfacet._kernels.py_kernels.
ext_modules = []
if os.environ.get("HYPERFACET_NO_EXT") != "1":
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "hyperfacet._kernels._ckernels",
                ["src/hyperfacet/_kernels/_ckernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
