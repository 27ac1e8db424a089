# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Helper tool to check license header."""
from pathlib import Path
import sys

usage = """
Usage: python3 scripts/lint/check-license-header.py <path> [<path> ...]

Check the license header of every source file under the given files or directories.
Example:
 - python3 scripts/lint/check-license-header.py rank3bd tests scripts ci setup.py
"""

IGNORE_FILES = ["LICENSE", "README.md", ".gitignore", "version.py"]
CHECKED_FILE_EXTS = [".py", ".sh"]
IGNORE_DIRS = ["__pycache__", ".pytest_cache", ".hypothesis"]


def check_license(fpath):
    has_license_header = False
    has_copyright = False
    try:
        with open(fpath, encoding="utf-8") as filep:
            for line in filep:
                if line.find("SPDX-License-Identifier: Apache-2.0") != -1:
                    has_license_header = True
                elif line.find("Copyright Amazon.com, Inc.") != -1:
                    has_copyright = True
                if has_license_header and has_copyright:
                    return True
    except UnicodeDecodeError:
        pass
    return False


def source_files(root):
    root = Path(root)
    candidates = [root] if root.is_file() else sorted(root.rglob("*"))
    for fpath in candidates:
        if not fpath.is_file() or any(part in IGNORE_DIRS for part in fpath.parts):
            continue
        if fpath.name in IGNORE_FILES or fpath.suffix not in CHECKED_FILE_EXTS:
            continue
        yield fpath


def main():
    if len(sys.argv) < 2:
        sys.stderr.write(usage)
        sys.stderr.flush()
        sys.exit(-1)

    error_list = [
        str(fpath)
        for root in sys.argv[1:]
        for fpath in source_files(root)
        if not check_license(fpath)
    ]
    if error_list:
        report = "-----Check report-----\n"
        report += "\n".join(error_list) + "\n"
        report += "-----Found %d files that cannot pass the license header check-----\n" % len(
            error_list
        )
        sys.stderr.write(report)
        sys.stderr.flush()
        sys.exit(-1)

    print("check-license-header.py: all checks passed..")


if __name__ == "__main__":
    main()
