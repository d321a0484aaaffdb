"""Build script for the optional compiled multiplication kernel.

The package is fully functional without the extension (a pure-Python
kernel is selected at import time), so the extension is marked optional
and a failed compile does not abort installation.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "ctseq._ctcore",
                ["src/ctseq/_ctcore.pyx"],
                language="c++",
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
