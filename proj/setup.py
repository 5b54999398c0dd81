from pathlib import Path

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

root = Path(__file__).resolve().parent
sources = ["python/bindings.cpp"] + sorted(
    str(p.relative_to(root)) for p in (root / "src").glob("*.cpp")
)

ext = Pybind11Extension(
    "genusforge._core",
    sources=sources,
    include_dirs=["include", "vendor"],
    libraries=["gmpxx", "gmp"],
    cxx_std=20,
    extra_compile_args=["-pthread"],
    extra_link_args=["-pthread"],
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
