"""Build script for the optional compiled centroid kernel.

Package metadata lives in pyproject.toml; only the extension module is
declared here.  The extension is skipped (with a warning) when Cython or a
C compiler is unavailable, in which case the pure-Python kernel is used at
runtime.  Set SPLPAT_PURE_PYTHON=1 to skip the extension build entirely.
"""
import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Degrade to the pure-Python kernel instead of failing the install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing or broken toolchain
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            f"warning: building the compiled centroid kernel failed ({exc}); "
            "falling back to the pure-Python kernel",
            file=sys.stderr,
        )


ext_modules = []
cmdclass = {}
if os.environ.get("SPLPAT_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        print(
            "warning: Cython not available; installing with the pure-Python "
            "centroid kernel",
            file=sys.stderr,
        )
    else:
        # -ffp-contract=off keeps the compiled kernel bit-identical to the
        # pure-Python one (no FMA contraction of a*b+c).
        ext_modules = cythonize(
            [
                Extension(
                    "splpat.fuzzy._centroid",
                    sources=["src/splpat/fuzzy/_centroid.pyx"],
                    extra_compile_args=["-O3", "-ffp-contract=off"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
        cmdclass["build_ext"] = optional_build_ext

setup(ext_modules=ext_modules, cmdclass=cmdclass)
