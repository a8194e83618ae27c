#!/usr/bin/env python3
"""Smoke test for the orthoext_py extension module.

Builds nothing itself: run `cargo build -p orthoext-py --release` first.
The script locates the compiled cdylib, exposes it under the importable
name, and exercises one call per binding.
"""

import shutil
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def locate_extension() -> Path:
    candidates = [
        REPO / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("liborthoext_py.so", "orthoext_py.so", "liborthoext_py.dylib")
    ]
    for path in candidates:
        if path.exists():
            return path
    sys.exit(
        "extension not found; run `cargo build -p orthoext-py --release` first"
    )


def import_module():
    source = locate_extension()
    staging = Path(tempfile.mkdtemp(prefix="orthoext_py_"))
    shutil.copy2(source, staging / "orthoext_py.so")
    sys.path.insert(0, str(staging))
    import orthoext_py

    return orthoext_py


def main() -> None:
    ox = import_module()
    checks = 0

    def ok(label: str, condition: bool) -> None:
        nonlocal checks
        if not condition:
            sys.exit(f"FAIL {label}")
        checks += 1
        print(f"ok {label}")

    # Completion engine on the reference examples.
    result = ox.complete([[4, 5, 6, 7], [-7, -2, -3, 8]])
    ok("complete d4 pair", result["status"] == "completed")
    basis = [[4, 5, 6, 7], [-7, -2, -3, 8]] + result["added"]
    ok("complete d4 gram", ox.verify(basis) == 126 and len(basis) == 4)

    result = ox.complete([[2, 3, 6]])
    ok("complete d3 square norm", result["status"] == "completed")

    result = ox.complete([[1, 3, 5]])
    ok(
        "complete d3 non-square norm",
        result["status"] == "impossible" and "reason" in result,
    )

    # Census.
    ok("partner none", ox.find_partner([1, 3, 5]) is None)
    partner = ox.find_partner([1, 4, 10])
    ok(
        "partner found",
        partner is not None
        and sum(a * b for a, b in zip(partner, [1, 4, 10])) == 0
        and sum(c * c for c in partner) == 117,
    )
    ok("enumerate 18", ox.enumerate_reps(18) == [[0, 3, 3], [1, 1, 4]])
    report = ox.classify(18)
    ok("classify 18", report["in_c3_1_2"] and not report["in_c3_1_3"])
    ok("diffset 50", ox.diffset(50) == [18, 45])
    ok("two squares", ox.sum_two_squares(18) and not ox.sum_two_squares(35))

    # Cross products, reproducing the reported coordinates.
    u = ox.cross7([1, 1, 3, 8, 1, 1, 2], [-1, 1, 1, -2, 2, 7, 2])
    ok("cross7", u == [-1, -13, 53, -20, -30, -11, 28])
    w = ox.cross8(
        [1, -2, -1, 1, -2, 2, -3, 1],
        [2, 1, -1, -1, -1, -2, 0, 2],
        [2, 1, 1, 1, 1, 1, 0, 0],
    )
    ok("cross8", w == [2, 0, -33, -27, 26, 30, 9, 11])

    # Hypercomplex arithmetic.
    ok("quat i*j=k", ox.quat_mul([0, 1, 0, 0], [0, 0, 1, 0]) == [0, 0, 0, 1])
    one = [1, 0, 0, 0, 0, 0, 0, 0]
    ok("cayley 1*y=y", ox.cayley_mul(one, list(range(1, 9))) == list(range(1, 9)))
    q, unit = ox.pythagorean_param([2, 3, 6])
    ok("pythagorean param", sum(c * c for c in q) == 7 and unit in "ijk")
    q1, q2 = ox.quat_bezout([1, 1, 1, 0], "i")
    ok("bezout returns", len(q1) == 4 and len(q2) == 4)

    # Clifford frames.
    family = ox.clifford_search(5)
    ok("clifford search n=5", len(family) == 5)
    rows = ox.clifford_frame(list(range(1, 17)), family)
    ok("clifford frame", ox.verify(rows) == sum(c * c for c in range(1, 17)))

    ok("canonicalize", ox.canonicalize([-8, 7, -2]) == [2, 7, 8])

    # Error mapping.
    try:
        ox.verify([[1, 1], [1, 0]])
    except ValueError:
        ok("verify raises ValueError", True)
    else:
        sys.exit("FAIL verify should raise ValueError")

    print(f"all {checks} smoke checks passed")


if __name__ == "__main__":
    main()
