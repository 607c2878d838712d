"""Build script: compiles the optional GF(p) elimination kernel.

The package works without the extension; koszulext.linalg falls back to a
numpy implementation when the compiled module is missing.
"""

from setuptools import setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "koszulext._gfkernel",
                ["src/koszulext/_gfkernel.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
