#!/usr/bin/env python3
"""Smoke test for the bcjulia_py extension module.

Build the extension first, then run this script from the repo root:

    cargo build -p bcjulia-py
    python3 python/smoke_test.py

The script locates the cdylib in target/{debug,release}, exposes it as an
importable module and exercises the bound types and generators.
"""

import math
import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        ROOT / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("libbcjulia_py.so", "bcjulia_py.so", "libbcjulia_py.dylib")
    ]
    for lib in candidates:
        if lib.exists():
            tmp = pathlib.Path(tempfile.mkdtemp(prefix="bcjulia_py_"))
            shutil.copy(lib, tmp / "bcjulia_py.so")
            sys.path.insert(0, str(tmp))
            import bcjulia_py

            return bcjulia_py
    sys.exit("bcjulia_py cdylib not found; run `cargo build -p bcjulia-py` first")


def main():
    m = load_module()

    # idempotent projections of the reference parameter
    w = m.Bicomplex(0.0635, 0.3725, 0.3725, 0.1865)
    p1, p2 = w.to_idempotent()
    assert abs(p1 - 0.25) < 1e-12, p1
    assert abs(p2 - (-0.123 + 0.745j)) < 1e-12, p2

    # multiplication table: i1 * i2 = j
    i1 = m.Bicomplex(0, 1, 0, 0)
    i2 = m.Bicomplex(0, 0, 1, 0)
    assert (i1 * i2).components == [0, 0, 0, 1]

    # four square roots of -1, each squaring back
    roots = m.Bicomplex(-1, 0, 0, 0).sqrt_branches()
    assert len(roots) == 4
    for r in roots:
        assert max(abs(x - y) for x, y in zip((r * r).components, [-1, 0, 0, 0])) < 1e-12

    assert m.Bicomplex(0.5, 0, 0, 0.5).is_null_cone()
    assert abs(m.Bicomplex(1, 0, 0, 1).norm() - math.sqrt(2)) < 1e-15

    # parabolic fixed point
    fps = m.fixed_points(0.25 + 0j)
    assert fps == [(0.5 + 0j, 1.0, "indifferent")], fps
    bc_fps = m.bc_fixed_points([0.0, 0.0, 0.0, 0.0])
    assert len(bc_fps) == 4

    # c = 0 circle oracle
    pts = m.julia2d(0j, n_points=2000, seed=7)
    assert len(pts) == 2000
    assert all(abs(math.hypot(x, y) - 1.0) < 1e-9 for x, y in pts)

    # bicomplex IIM, sliced; determinism across calls
    cloud = m.julia3d_iim([0.25, 0, 0, 0], n_points=5000, seed=3)
    assert cloud, "empty sliced cloud"
    assert cloud == m.julia3d_iim([0.25, 0, 0, 0], n_points=5000, seed=3)
    assert all(tag == "JxJ" for _, _, _, tag in cloud)

    # boundary cloud carries all three tags
    cloud = m.julia3d_boundary(
        [0.0635, 0.3725, 0.3725, 0.1865],
        n_points=2000,
        grid_n=101,
        budget=20000,
        seed=5,
    )
    tags = {tag for _, _, _, tag in cloud}
    assert tags == {"JxJ", "JxK", "KxJ"}, tags

    assert m.dendrite_check([0, 1, 0, 0], grid_n=201) == "dendrite-consistent"
    assert m.dendrite_check([0, 0, 0, 0], grid_n=201) == "not-dendrite"

    print("smoke test: all checks passed (rng:", m.RNG_ID + ")")


if __name__ == "__main__":
    main()
