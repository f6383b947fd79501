#!/usr/bin/env python

import os
import setuptools

install_requires = [
    line.rstrip() for line in open(os.path.join(os.path.dirname(__file__), "REQUIREMENTS.txt"))
]

setuptools.setup(
    packages=setuptools.find_packages(exclude=["examples", "examples.*"]),
    install_requires=install_requires,
    entry_points={
        'console_scripts': [
            "modfunctor=modfunctor:modfunctor",
        ]
    },
    package_data={
        "modfunctor": ["REQUIREMENTS-STRICT.txt"],
        "modfunctor.core.basic_data": ["schema/*.json"],
    },
    include_package_data=True,
)
