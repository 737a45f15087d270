"""Build script.

The compiled extension is optional: if Cython or a C compiler is missing the
package installs in pure-Python mode and selects the fallback kernels at
import time.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing or broken
            sys.stderr.write(f"warning: compiled extension skipped: {exc}\n")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            sys.stderr.write(f"warning: building {ext.name} failed: {exc}\n")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        sys.stderr.write("warning: Cython not available, pure-Python install\n")
        return []
    return cythonize(
        [
            Extension(
                "proxigraph._speedups",
                ["src/proxigraph/_speedups.pyx"],
                language="c++",
            )
        ],
        language_level=3,
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
