from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
    import numpy as np

    ext_modules = cythonize(
        [
            Extension(
                "ctcdro._ctc_kernel",
                ["src/ctcdro/_ctc_kernel.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    # Pure-Python fallback kernel is selected at import when the
    # compiled extension is unavailable.
    ext_modules = []

setup(ext_modules=ext_modules)
