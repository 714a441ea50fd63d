from setuptools import Extension, setup
from Cython.Build import cythonize

extensions = [
    Extension(
        "filedrawer._mc_kernel",
        ["src/filedrawer/_mc_kernel.pyx"],
        extra_compile_args=["-O2", "-ffp-contract=off"],
    )
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={"language_level": "3"},
    )
)
