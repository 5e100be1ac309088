"""Regenerate ``oracle_frozen.json`` from the dense linear-algebra oracle.

Run from the repository root: ``python3 tests/data/make_frozen.py``.
The Groebner engine is not used here; the acceptance test compares it
against these frozen tables.
"""

import json
from pathlib import Path

from koszul_depth.complexes.complex import Complex
from koszul_depth.harness.families import generate_instances
from koszul_depth.homology.oracle import oracle_table

BOUND = 8
FAMILIES = [("regular-sequence", {}), ("homological", {}), ("torsion-band", {}), ("theorem-i", {"count": 12})]


def main():
    out = {}
    for fam, kw in FAMILIES:
        for inst in generate_instances(fam, seed=0, **kw):
            for name in sorted(inst.complexes_data):
                C = inst.complex(name)
                if not isinstance(C, Complex) or not C.graded or C.is_empty:
                    continue
                table = oracle_table(C, BOUND)
                out[f"{inst.name}/{name}"] = {
                    "family": fam,
                    "params": kw,
                    "instance": inst.name,
                    "complex": name,
                    "bound": BOUND,
                    "dims": {str(i): {str(d): v for d, v in t.items()} for i, t in table.items()},
                }
    path = Path(__file__).with_name("oracle_frozen.json")
    path.write_text(json.dumps(out, indent=1, sort_keys=True) + "\n")
    print(f"{len(out)} complexes frozen to {path}")


if __name__ == "__main__":
    main()
