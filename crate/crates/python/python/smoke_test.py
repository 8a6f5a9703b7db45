"""Smoke test for the hamcert_py extension module.

Builds the extension with cargo unless HAMCERT_PY_LIB points at a built
library, then imports it and exercises every function.
"""

import importlib.util
import os
import pathlib
import shutil
import subprocess
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parents[3]


def built_library() -> pathlib.Path:
    lib = os.environ.get("HAMCERT_PY_LIB")
    if lib:
        return pathlib.Path(lib)
    subprocess.run(
        ["cargo", "build", "--release", "-p", "hamcert-py", "--features", "extension-module"],
        cwd=ROOT,
        check=True,
    )
    suffix = {"darwin": "dylib", "win32": "dll"}.get(sys.platform, "so")
    return ROOT / "target" / "release" / f"libhamcert_py.{suffix}"


def load():
    tmp = pathlib.Path(tempfile.mkdtemp())
    target = tmp / "hamcert_py.so"
    shutil.copy(built_library(), target)
    spec = importlib.util.spec_from_file_location("hamcert_py", target)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def main() -> int:
    h = load()
    names = dict(h.catalog(24))
    assert names["S4"] == 24, names
    assert sum(1 for order in names.values() if order == 24) == 15
    assert h.route(75).startswith("3p^2")

    cert = h.solve("S4", [2, 4])
    assert cert.startswith("group S4\n"), cert
    assert h.verify(cert)
    assert not h.verify(cert.replace("repeat 2", "repeat 3"))

    report, ok = h.sweep(6, 8, max_gens=2, jobs=2)
    lines = report.splitlines()
    assert ok and lines[0].startswith("group\torder"), lines[:2]
    assert len(lines) > 1

    try:
        h.solve("no-such-group", [1])
    except ValueError:
        pass
    else:
        raise AssertionError("unknown group accepted")
    print("hamcert_py smoke test passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
