from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "symfer._symfer",
    sources=[
        "bindings/pymodule.cpp",
        "src/rational.cpp",
        "src/linalg.cpp",
        "src/fock.cpp",
        "src/vertex.cpp",
        "src/c2.cpp",
        "src/zhu.cpp",
        "src/report.cpp",
    ],
    include_dirs=["include", "vendor"],
    libraries=["gmpxx", "gmp"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
