"""Instance files: a ring, named ideals, complexes and primes, suites, caps, expectations."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from ..algebra.ring import Ring
from ..complexes.complex import complex_from_json

DEFAULT_CAPS = {
    "resolution_length": 24,
    "window_radius": 12,
    "oracle_bound": None,
    "lc_n_max": 4,
    "fd_cap": 12,
}

PROVENANCE = ("paper", "trivial", "derived")


class InstanceError(ValueError):
    pass


@dataclass
class Instance:
    name: str
    ring_data: dict
    ideals: dict = field(default_factory=dict)
    complexes_data: dict = field(default_factory=dict)
    primes: dict = field(default_factory=dict)
    suites: list = field(default_factory=list)
    caps: dict = field(default_factory=dict)
    expect: dict = field(default_factory=dict)
    params: dict = field(default_factory=dict)
    family: str | None = None
    extra_rings: dict = field(default_factory=dict)

    def __post_init__(self):
        self.caps = {**DEFAULT_CAPS, **(self.caps or {})}
        self._ring = None
        self._rings = {}
        self._complexes = {}
        self.validate()

    # -- validation -------------------------------------------------------
    def validate(self):
        for k in ("resolution_length", "window_radius", "lc_n_max", "fd_cap"):
            v = self.caps.get(k)
            if not isinstance(v, int) or v <= 0:
                raise InstanceError(f"cap {k!r} must be a positive integer")
        ob = self.caps.get("oracle_bound")
        if ob is not None and (not isinstance(ob, int) or ob < 0):
            raise InstanceError("cap 'oracle_bound' must be a non-negative integer")
        for key, e in self.expect.items():
            if not isinstance(e, dict) or e.get("tag") not in PROVENANCE:
                raise InstanceError(f"expected value {key!r} needs a tag from {PROVENANCE}")
        for pair in self.params.get("pairs", []):
            self._need_ideal(pair[0])
            self._need_complex(pair[1])

    def _need_ideal(self, name):
        if name not in self.ideals:
            raise InstanceError(f"undefined ideal {name!r}")

    def _need_complex(self, name):
        if name not in self.complexes_data:
            raise InstanceError(f"undefined complex {name!r}")

    # -- materialization --------------------------------------------------
    @property
    def ring(self) -> Ring:
        if self._ring is None:
            self._ring = Ring.from_descriptor(self.ring_data)
        return self._ring

    def ring_named(self, name: str | None) -> Ring:
        if name is None or name == "R":
            return self.ring
        if name not in self._rings:
            if name not in self.extra_rings:
                raise InstanceError(f"undefined ring {name!r}")
            self._rings[name] = Ring.from_descriptor(self.extra_rings[name])
        return self._rings[name]

    def ideal(self, name: str, ring=None):
        self._need_ideal(name)
        ring = ring or self.ring
        gens = [ring.parse(g) for g in self.ideals[name]]
        return gens or [ring.zero]

    def prime(self, name: str):
        if name not in self.primes:
            raise InstanceError(f"undefined prime {name!r}")
        return [self.ring.parse(g) for g in self.primes[name]]

    def complex(self, name: str):
        self._need_complex(name)
        if name not in self._complexes:
            data = self.complexes_data[name]
            ring = self.ring_named(data.get("ring"))
            self._complexes[name] = complex_from_json(ring, data)
        return self._complexes[name]

    def pairs(self):
        """``(ideal, complex)`` name pairs the depth and width suites run on."""
        if "pairs" in self.params:
            return [tuple(p) for p in self.params["pairs"]]
        return [(a, c) for a in sorted(self.ideals) for c in sorted(self.complexes_data)
                if self.complexes_data[c].get("ring") in (None, "R")]

    # -- serialization ----------------------------------------------------
    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "ring": self.ring_data,
            "ideals": self.ideals,
            "complexes": self.complexes_data,
            "primes": self.primes,
            "suites": self.suites,
            "caps": self.caps,
            "expect": self.expect,
        }
        if self.params:
            out["params"] = self.params
        if self.family:
            out["family"] = self.family
        if self.extra_rings:
            out["rings"] = self.extra_rings
        return out

    @classmethod
    def from_json(cls, data: dict, name: str | None = None) -> "Instance":
        if "ring" not in data:
            raise InstanceError("instance needs a 'ring'")
        return cls(
            name=data.get("name", name or "instance"),
            ring_data=data["ring"],
            ideals=data.get("ideals", {}),
            complexes_data=data.get("complexes", {}),
            primes=data.get("primes", {}),
            suites=list(data.get("suites", [])),
            caps=data.get("caps", {}),
            expect=data.get("expect", {}),
            params=data.get("params", {}),
            family=data.get("family"),
            extra_rings=data.get("rings", {}),
        )


def load_instances(path) -> list[Instance]:
    """Read a file holding one instance object or a list of them."""
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise InstanceError(f"{path}: invalid JSON ({exc})") from exc
    if isinstance(data, list):
        return [Instance.from_json(d, f"{path.stem}-{i}") for i, d in enumerate(data)]
    return [Instance.from_json(data, path.stem)]


def dump_instances(instances, path):
    data = [i.to_json() for i in instances]
    Path(path).write_text(json.dumps(data if len(data) != 1 else data[0], indent=2, sort_keys=True) + "\n")
