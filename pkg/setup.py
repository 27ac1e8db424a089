#!/usr/bin/env python
# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

# Environment variables you are probably interested in:
#
#   RANK3BD_VERSION
#     specify the version, rather than the hard-coded version
#     in this file; used when we're building packages for distribution
#
#   RELEASE_VERSION=0
#     create a release version (i.e., a version with no "+git" suffix)
#

from __future__ import print_function

import os
import subprocess
import sys

from setuptools import setup, find_packages

base_dir = os.path.dirname(os.path.abspath(__file__))


def _get_build_mode():
    for i in range(1, len(sys.argv)):
        if not sys.argv[i].startswith("-"):
            return sys.argv[i]


def _check_env_flag(name, default=""):
    return os.getenv(name, default).upper() in ["ON", "1", "YES", "TRUE", "Y"]


def get_git_head_sha(base_dir):
    try:
        return (
            subprocess.check_output(
                ["git", "rev-parse", "--short", "HEAD"], cwd=base_dir, stderr=subprocess.DEVNULL
            )
            .decode("ascii")
            .strip()
        )
    except (OSError, subprocess.CalledProcessError):
        return ""


def get_build_version(git_sha):
    version = os.getenv("RANK3BD_VERSION", "0.1")
    if git_sha and not _check_env_flag("RELEASE_VERSION", default="0"):
        version += "+git" + git_sha
    return version


def create_version_file(base_dir, version):
    print("Building rank3bd version: {}".format(version))
    py_version_path = os.path.join(base_dir, "rank3bd", "version.py")
    with open(py_version_path, "w") as f:
        f.write('"""Autogenerated file, do not edit!"""\n')
        f.write("__version__ = '{}'\n".format(version))


version = get_build_version(get_git_head_sha(base_dir))
if _get_build_mode() not in ["clean"]:
    create_version_file(base_dir, version)

setup(
    name="rank3bd",
    version=version,
    description="Exact combinatorics of rank-3 Bratteli diagrams and covering towers of k-graphs",
    packages=find_packages(exclude=["build", "tests", "tests.*"]),
    package_data={"rank3bd": ["data/examples/*.json", "data/golden/*.txt"]},
    install_requires=["numpy", "sympy", "filelock"],
    extras_require={"tests": ["pytest", "hypothesis"]},
    entry_points={"console_scripts": ["rank3bd=rank3bd.cli:main"]},
    python_requires=">=3.8",
)
