#!/usr/bin/env python
from setuptools import setup, find_packages

readme = open("README.md", encoding="utf-8").read()
license = open("LICENSE", encoding="utf-8").read()
version = open("sclogic/VERSION", encoding="utf-8").read().strip()

setup(
    name="sclogic",
    version=version,
    description="Normal forms, congruence checks and counter-model search for short-circuit logic.",
    long_description=readme,
    long_description_content_type="text/markdown",
    license="MIT",
    packages=find_packages(exclude=["examples", "examples.*"]),
    include_package_data=True,
    package_data={"sclogic": ["VERSION", "congruences/axioms/*.yaml"]},
    install_requires=["pyyaml"],
    extras_require={"ruamel": ["ruamel.yaml"], "dot": ["pydot"]},
    python_requires=">=3.8",
    entry_points={
        "console_scripts": ["sclogic=sclogic.command_line:main"],
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Operating System :: OS Independent",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Programming Language :: Python :: 3.13",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
