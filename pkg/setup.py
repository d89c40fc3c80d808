#!/usr/bin/env python
# -*- coding: utf-8 -*-

from setuptools import setup, find_packages


requirements = [
    "attrs>=21.1.0",
    "related",
    "numpy",
    "pandas>=0.21.0",
    "tqdm",
    "PyYAML>=5.1.0",
]

test_requirements = [
    "bumpversion",
    "wheel",
    "pytest>=3.3.1",
    "pytest-xdist",  # running tests in parallel
    "pytest-cov",
    "hypothesis",
]
desc = "defect_topology: topological classification of crystal defects with exact arithmetic"
setup(
    name='defect_topology',
    version='0.1.0',
    description=desc,
    author="defect-topology developers",
    author_email='defect-topology@users.noreply.github.com',
    url='https://github.com/defect-topology/defect-topology',
    long_description=desc,
    packages=find_packages(exclude=["tests"]),
    package_data={"defect_topology": ["data/*.yaml"]},
    install_requires=requirements,
    extras_require={
        "develop": test_requirements,
    },
    entry_points={
        "console_scripts": ["defect-topology = defect_topology.cli:main"],
    },
    license="MIT license",
    zip_safe=False,
    keywords=["topological defects", "crystallography", "homotopy",
              "conjugacy classes", "binary polyhedral groups", "smith normal form"],
    test_suite='tests',
    include_package_data=True,
    tests_require=test_requirements
)
