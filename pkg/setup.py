import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the accelerator extension, falling back to pure Python on failure."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"warning: extension build skipped ({exc}); pure-Python kernels will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: {ext.name} failed to build ({exc}); pure-Python kernels will be used")


def extensions():
    if os.environ.get("FINSLERLAB_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "finslerlab._jetcore",
        ["src/finslerlab/_jetcore.pyx"],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
