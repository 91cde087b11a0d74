from setuptools import Extension, setup
from Cython.Build import cythonize

setup(ext_modules=cythonize(
    [
        Extension(
            "cwglt._eigen_cy",
            ["src/cwglt/_eigen_cy.pyx"],
            extra_compile_args=["-O3"],
            language="c",
        )
    ],
    language_level=3,
))
