"""Smoke test for the clifford_py extension module.

Build and run from the repository root:

    cargo build --release -p clifford-py --features extension-module
    cp target/release/libclifford_py.so python/clifford_py.so
    python3 python/smoke_test.py
"""

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

import clifford_py as cp


def main():
    u, v = cp.Elem("u"), cp.Elem("v")
    one = cp.Elem("1")

    assert (u * v) / v == u
    assert (u + v).square() == cp.Elem("u^2+v^2")
    assert u.square().is_square() and not u.is_square()
    try:
        one / cp.Elem("0")
    except ZeroDivisionError:
        pass
    else:
        raise AssertionError("division by zero accepted")

    m = cp.Line(one, u)
    assert m.is_parallel(cp.Line(v, u * v))
    assert m.is_parallel_geometric(cp.Line(v, u * v))
    assert not m.is_parallel(cp.Line(one, v))
    assert m.times(v) == cp.Line(v, u * v)
    assert m.times(v).class_representative() == m

    b = cp.Elem.random(7, 3)
    assert cp.Line(one, b).times(b).is_parallel(cp.Line(one, b))

    assert cp.polarity_kind([one, cp.Elem("0"), cp.Elem("0"), cp.Elem("0")]) == "elliptic"
    assert cp.polarity_kind([cp.Elem("0"), cp.Elem("0"), cp.Elem("0"), one]) == "null"
    assert len(cp.translation_matrix(u)) == 4

    passed, report = cp.verify_all(samples=3, suites=["main_theorem", "fano"])
    names = [s["name"] for s in json.loads(report)["suites"]]
    assert passed and len(names) == 2, report

    print("smoke test passed:", m, "|", names)


if __name__ == "__main__":
    main()
