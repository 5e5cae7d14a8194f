from Cython.Build import cythonize
from setuptools import Extension, setup

ext_modules = [
    Extension(
        "limpack._ckernels",
        ["src/limpack/_ckernels.pyx"],
        extra_compile_args=["-O3"],
        optional=True,
    )
]

setup(ext_modules=cythonize(ext_modules, compiler_directives={"language_level": "3"}))
