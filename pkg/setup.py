"""Optional build of the compiled Gröbner kernels.

Without Cython or a C compiler the package installs as pure Python and
uses the fallback kernels.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
except ImportError:
    pass
else:
    ext_modules = cythonize(
        ["src/critinf/groebner/_kernels_cy.pyx"],
        compiler_directives={"language_level": "3"},
        quiet=True,
    )

setup(ext_modules=ext_modules)
