"""CMake-driven build for the _graphwalk extension.

scikit-build-core would be the natural backend here, but the build runs in
environments where only setuptools is guaranteed, so we drive CMake from a
custom build_ext instead.
"""

import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp) / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)
        ext_path = Path(self.get_ext_fullpath(ext.name)).resolve()
        ext_path.parent.mkdir(parents=True, exist_ok=True)

        import pybind11

        subprocess.run(
            [
                "cmake",
                str(source_dir),
                "-DGRAPHWALK_BUILD_PYTHON=ON",
                "-DCMAKE_BUILD_TYPE=Release",
                f"-Dpybind11_DIR={pybind11.get_cmake_dir()}",
                f"-DPYTHON_EXECUTABLE={sys.executable}",
                f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={ext_path.parent}",
            ],
            cwd=build_dir,
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_graphwalk", "-j"],
            cwd=build_dir,
            check=True,
        )


setup(
    ext_modules=[CMakeExtension("graphwalk._graphwalk")],
    cmdclass={"build_ext": CMakeBuild},
)
