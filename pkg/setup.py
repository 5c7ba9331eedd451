from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # pure-Python install: the numpy fallback kernels serve instead
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("coralgeo._ckernels", ["src/coralgeo/_ckernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
