from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "plumbjsj._kernel._speedups",
                ["src/plumbjsj/_kernel/_speedups.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # No Cython available: install pure-Python only, the kernel package
    # falls back to its interpreted implementation at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
