#!/usr/bin/env python3
"""Run the acceptance suite and show the per-criterion pass/fail lines."""

import pathlib
import subprocess
import sys

if __name__ == "__main__":
    root = pathlib.Path(__file__).resolve().parent.parent
    sys.exit(
        subprocess.run(
            [
                sys.executable,
                "-m",
                "pytest",
                str(root / "tests" / "test_acceptance.py"),
                "-v",
                "-s",
            ],
            cwd=root,
        ).returncode
    )
