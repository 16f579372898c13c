#!/usr/bin/env python3
"""Smoke test for the postlie_py extension module.

Builds nothing itself: run `cargo build -p postlie-py` first (or pass
--release and build in release mode). The script copies the cdylib next to
itself under the importable name and exercises the main entry points.
"""

import json
import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load_module(profile: str):
    libname = "libpostlie_py.so" if sys.platform != "darwin" else "libpostlie_py.dylib"
    built = ROOT / "target" / profile / libname
    if not built.exists():
        sys.exit(f"build the extension first: cargo build -p postlie-py ({built} missing)")
    tmp = pathlib.Path(tempfile.mkdtemp(prefix="postlie_py_"))
    shutil.copy(built, tmp / "postlie_py.so")
    sys.path.insert(0, str(tmp))
    import postlie_py

    return postlie_py


def main():
    profile = "release" if "--release" in sys.argv else "debug"
    pl = load_module(profile)

    names = [name for name, _ in pl.catalog_entries()]
    assert "heisenberg" in names and "f23" in names, names

    f23 = pl.LieAlgebra.catalog("f23")
    assert f23.dim() == 5
    assert f23.is_nilpotent()
    assert f23.lower_central_dims() == [5, 3, 2, 0]
    assert f23.derivations_dim() == 10
    analysis = json.loads(f23.analyze())
    assert analysis["dim_der"] == 10 and analysis["dim_inner"] == 3

    # round trip through the JSON file format
    copy = pl.LieAlgebra.from_json(f23.to_json())
    assert copy.to_json() == f23.to_json()

    # a known commutative structure on the Heisenberg algebra
    h1 = pl.LieAlgebra.catalog("heisenberg")
    c3 = pl.Product.from_json('{"dim":3,"products":[{"i":1,"j":1,"coeffs":{"3":"1"}}]}')
    verdict = json.loads(pl.verify_commutative(h1, c3))
    assert verdict["axioms"]["pass"] is True
    assert verdict["nilpotency"]["nilpotent"] is True

    # the counterexample with a non-nilpotent left operator
    h1c = pl.LieAlgebra.catalog("h1_plus_C")
    p = pl.Product.from_json(
        '{"dim":4,"products":['
        '{"i":1,"j":1,"coeffs":{"4":"1"}},'
        '{"i":1,"j":4,"coeffs":{"4":"1"}},'
        '{"i":4,"j":1,"coeffs":{"4":"1"}},'
        '{"i":4,"j":4,"coeffs":{"4":"1"}}]}'
    )
    verdict = json.loads(pl.verify_commutative(h1c, p))
    assert verdict["axioms"]["pass"] is True
    assert verdict["nilpotency"]["nilpotent"] is False
    assert verdict["nilpotency"]["witness"] == ["1", "0", "0", "0"]

    # certified nonexistence on (heisenberg, sl2)
    sl2 = pl.LieAlgebra.catalog("sl2")
    solved = json.loads(pl.solve_pair(h1, sl2))
    assert solved["status"] == "empty"
    assert "1" in solved["certificate"]

    # existence witness on (r3_diag(1), sl2)
    r3 = pl.LieAlgebra.catalog("r3_diag", "1")
    solved = json.loads(pl.solve_pair(r3, sl2))
    assert solved["status"] == "witness"
    assert solved["witness"]["phi"][0][0] == "-1/2"

    # classification on r2 finds the three classes
    r2 = pl.LieAlgebra.catalog("r2")
    result = json.loads(pl.classify(r2))
    labels = [c["label"] for c in result["classes"]]
    assert labels == ["A1", "A2", "A3"], labels
    assert all(c["verified"] for c in result["classes"])

    print("postlie_py smoke test: ok")


if __name__ == "__main__":
    main()
