from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

core_sources = [
    "src/python/module.cpp",
    "src/matrix.cpp",
    "src/spectra.cpp",
    "src/bounds.cpp",
    "src/io.cpp",
    "src/verify.cpp",
    "src/repro.cpp",
]

setup(
    ext_modules=[
        Pybind11Extension(
            "nrbounds._core",
            core_sources,
            include_dirs=["include", "vendor"],
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
)
