from glob import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "wsatlab",
    sorted(glob("src/*.cpp")) + ["bindings/wsatlab_py.cpp"],
    include_dirs=["include", "vendor", "src"],
    cxx_std=20,
    extra_compile_args=["-pthread"],
    extra_link_args=["-pthread"],
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
