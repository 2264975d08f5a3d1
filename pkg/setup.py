from setuptools import Extension, setup
from Cython.Build import cythonize

setup(
    ext_modules=cythonize(
        [Extension("entrodist._fastcore", ["src/entrodist/_fastcore.pyx"])],
        language_level=3,
    )
)
