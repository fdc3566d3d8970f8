import sys

sys.path.insert(0, "/root/pkg/tests")
from test_acceptance import _build, _chemical_spec, _physical_spec

specs = [_chemical_spec(k, s) for k in ("collider", "chain", "full")
         for s in (0, 1, 2)]
_build(specs)
_build([_physical_spec(0)])
_build([_chemical_spec(k, 0, method="monolithic")
        for k in ("collider", "full")])
print("all acceptance artifacts built")
