"""Smoke test for the omnilie extension module.

Build with `cargo build -p omnilie-py`, then copy target/debug/libomnilie_py.so
next to this script as omnilie.so (or pass its directory as argv[1]).
"""

import os
import sys

sys.path.insert(0, sys.argv[1] if len(sys.argv) > 1 else os.path.dirname(__file__))

import omnilie  # noqa: E402

algebras, reps = omnilie.catalog_names()
assert "L2" in algebras and "sl2_std_sym" in reps

l2 = omnilie.LeibnizAlgebra.catalog("L2")
assert l2.dim == 2 and l2.is_leibniz()
assert l2.bracket(["0", "1"], ["0", "1"]) == ["1", "0"]
assert omnilie.LeibnizAlgebra.from_json(l2.to_json()).to_json() == l2.to_json()

bad = omnilie.LeibnizAlgebra(2, [(1, 1, 2, "1"), (2, 1, 1, "1")])
assert "(1,1,1)" in bad.check()

trivial = omnilie.Representation.trivial(l2, 1)
assert trivial.cohomology_dims(1) == [1, 1]
assert omnilie.Representation.catalog("L2_line").mc_check()

assert l2.trivial_omnireps() == [["0", "1"]]
lp, om = l2.compare_adjoint(3)
assert lp == om
for label, lp, om in l2.compare_trivial(3):
    assert lp == om, label

rho = omnilie.OmniRep.adjoint(l2)
assert rho.is_valid() and rho.image_dim() == 2
z = omnilie.omni_bracket([["1", "0"], ["0", "1"]], ["0", "0"], [["0", "0"], ["0", "0"]], ["1", "2"])
assert z == ([["0", "0"], ["0", "0"]], ["1", "2"])
assert omnilie.is_embedding_tensor([[["0"]]])
assert not omnilie.is_embedding_tensor([[["1"]]])

try:
    omnilie.LeibnizAlgebra.from_json('{"dim":2,"bracket":[[3,1,1,"1"]]}')
except ValueError as e:
    assert "bracket[0][0]" in str(e)
else:
    raise AssertionError("index error not raised")

report = omnilie.balavoine_selftest(0, 10)
assert report["passed"]

print("python smoke test passed")
