from setuptools import Extension, setup


def _extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:  # fall back to the numpy kernels
        return []
    return cythonize(
        [
            Extension(
                "sbitlab._ckernels",
                ["src/sbitlab/_ckernels.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )


setup(ext_modules=_extensions())
