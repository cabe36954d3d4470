"""Build script: compiles the rational-kernel extension when possible.

The package works without the extension (pure-Python kernels are selected
at import time), so a failed Cython build only costs speed.
Set HYPLAB_NO_EXT=1 to skip the extension build entirely.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("HYPLAB_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/hyplab/_kernels/_ratcore.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except Exception as exc:  # pragma: no cover - build-environment dependent
        print(f"hyplab: compiled kernels skipped ({exc}); pure-Python fallback will be used")

setup(ext_modules=ext_modules)
