from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

core_sources = [
    "src/factored_rational.cpp",
    "src/quadratic_field.cpp",
    "src/hilbert.cpp",
    "src/quaternion.cpp",
    "src/diff_sets.cpp",
    "src/ideal_count.cpp",
    "src/degree.cpp",
    "src/report_io.cpp",
    "src/verify.cpp",
]

setup(
    ext_modules=[
        Pybind11Extension(
            "arithdeg._arithdeg",
            sources=["bindings/module.cpp"] + core_sources,
            include_dirs=["include", "vendor"],
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
)
