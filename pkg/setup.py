#!/usr/bin/env python
"""
Package metadata for xlmimo.
"""
import os
import re

from setuptools import find_packages, setup  # pylint: disable=E0401


def get_version(*file_paths):
    """
    Extract the version string from the file.

    Input:
     - file_paths: relative path fragments to file with
                   version string
    """
    filename = os.path.join(os.path.dirname(__file__), *file_paths)
    with open(filename, encoding="utf8") as version_file:
        version_match = re.search(
            r"^__version__ = ['\"]([^'\"]*)['\"]", version_file.read(), re.M
        )
    if version_match:
        return version_match.group(1)
    raise RuntimeError("Unable to find version string.")


def is_requirement(line):
    """
    Return True if the line names a package.

    Blank lines, comments and pip options (-r, -c, -e) are skipped.
    """
    line = line.split("#")[0].strip()
    return bool(line) and not line.startswith(("-r", "-c", "-e", "git+"))


def load_requirements(*requirements_paths):
    """
    Load the requirements of the given .in files, constrained by any -c files they reference.

    Returns a sorted list of requirement strings.
    """
    requirements = {}
    constraint_files = set()
    for path in requirements_paths:
        with open(path, encoding="utf8") as reqs:
            for line in reqs:
                if is_requirement(line):
                    requirements[line.split("#")[0].strip()] = ""
                elif line.startswith("-c") and not line.startswith("-c http"):
                    constraint_files.add(
                        os.path.join(os.path.dirname(path), line.split("#")[0][2:].strip())
                    )

    for constraint_file in constraint_files:
        with open(constraint_file, encoding="utf8") as reader:
            for line in reader:
                if not is_requirement(line):
                    continue
                match = re.match(r"([a-zA-Z0-9\-_.]+)([<>=!~].*)", line.split("#")[0].strip())
                if match and match.group(1) in requirements:
                    requirements[match.group(1)] = match.group(2)

    return [f"{package}{version}" for package, version in sorted(requirements.items())]


VERSION = get_version("xlmimo", "__init__.py")

with open(os.path.join(os.path.dirname(__file__), "README.rst"), encoding="utf8") as readme:
    README = readme.read()
with open(os.path.join(os.path.dirname(__file__), "CHANGELOG.rst"), encoding="utf8") as changelog:
    CHANGELOG = changelog.read()

setup(
    name="xlmimo",
    version=VERSION,
    description="""Cell-free XL-MIMO uplink simulator with fuzzy multi-agent power control""",
    long_description=README + "\n\n" + CHANGELOG,
    packages=find_packages(
        include=["xlmimo", "xlmimo.*"],
        exclude=["*tests"],
    ),
    include_package_data=True,
    install_requires=load_requirements("requirements/base.in"),
    python_requires=">=3.10",
    license="AGPL 3.0",
    zip_safe=False,
    keywords="Python cell-free XL-MIMO power control reinforcement learning",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Framework :: Django",
        "Framework :: Django :: 4.2",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: GNU Affero General Public License v3 or later (AGPLv3+)",
        "Natural Language :: English",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering",
    ],
)
