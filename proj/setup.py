from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext_modules = [
    Pybind11Extension(
        "stablecore._stablecore",
        sources=[
            "bindings/pymodule.cpp",
            "src/graph.cpp",
            "src/graph_io.cpp",
            "src/stable_sets.cpp",
            "src/core_analysis.cpp",
            "src/theorems.cpp",
        ],
        include_dirs=["include", "vendor"],
        cxx_std=20,
    ),
]

setup(ext_modules=ext_modules, cmdclass={"build_ext": build_ext})
