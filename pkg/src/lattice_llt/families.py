"""Declarative families of independent integer-valued summands.

A FamilySpec names the law of each summand in a length-n sequence:
iid kinds (bernoulli, uniform_int, finite), lattice dilations
(span_lattice, which maps each atom m of a base law to d*m), and
deterministic mixtures of several component laws. Realization is fully
deterministic so every run is bit-reproducible.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .convolve import convolve_fft, iid_power
from .pmf import LatticePmf, make_pmf

KINDS = ("bernoulli", "uniform_int", "finite", "span_lattice", "mixture_sequence")


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: dict = field(default_factory=dict)
    n: int = 1

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError("kind: unknown family kind %r" % (self.kind,))
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError("n: must be a positive integer")
        _validate(self.kind, self.params)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "params": _params_dict(self), "n": self.n}

    @classmethod
    def from_dict(cls, d: dict) -> "FamilySpec":
        if not isinstance(d, dict) or "kind" not in d:
            raise ValueError("kind: missing")
        return cls(d["kind"], _parse_params(d["kind"], d.get("params", {})), d.get("n", 1))

    @classmethod
    def from_json(cls, text: str) -> "FamilySpec":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError("spec: invalid JSON (%s)" % exc) from exc
        return cls.from_dict(data)


def _validate(kind: str, params: dict) -> None:
    if kind == "bernoulli":
        p = params.get("p")
        if not isinstance(p, (int, float)) or not 0.0 < p < 1.0:
            raise ValueError("p: must lie strictly in (0, 1)")
    elif kind == "uniform_int":
        lo, hi = params.get("lo"), params.get("hi")
        if not isinstance(lo, int) or not isinstance(hi, int):
            raise ValueError("lo/hi: must be integers")
        if lo > hi:
            raise ValueError("lo: must be <= hi")
    elif kind == "finite":
        if not isinstance(params.get("offset"), int):
            raise ValueError("offset: must be an integer")
        w = params.get("weights")
        if not isinstance(w, (list, tuple)) or not w:
            raise ValueError("weights: must be a nonempty list")
        try:
            make_pmf(params["offset"], w)
        except ValueError as exc:
            raise ValueError("weights: %s" % exc) from exc
    elif kind == "span_lattice":
        d = params.get("d")
        if not isinstance(d, int) or d < 1:
            raise ValueError("d: must be a positive integer")
        if not isinstance(params.get("base"), FamilySpec):
            raise ValueError("base: must be a nested family spec")
    elif kind == "mixture_sequence":
        comps = params.get("components")
        if not isinstance(comps, (list, tuple)) or not comps:
            raise ValueError("components: must be a nonempty list")
        for i, c in enumerate(comps):
            if not isinstance(c, dict) or not isinstance(c.get("spec"), FamilySpec):
                raise ValueError("components[%d].spec: must be a nested family spec" % i)
            has_count = "count" in c
            has_rate = "rate" in c
            if has_count == has_rate:
                raise ValueError(
                    "components[%d]: exactly one of count or rate required" % i
                )
            if has_count and (not isinstance(c["count"], int) or c["count"] < 0):
                raise ValueError("components[%d].count: must be an integer >= 0" % i)
            if has_rate and not 0.0 < c["rate"] <= 1.0:
                raise ValueError("components[%d].rate: must lie in (0, 1]" % i)


def _parse_params(kind: str, params) -> dict:
    if not isinstance(params, dict):
        raise ValueError("params: must be an object")
    params = dict(params)
    if kind == "span_lattice" and isinstance(params.get("base"), dict):
        params["base"] = FamilySpec.from_dict(params["base"])
    if kind == "mixture_sequence" and isinstance(params.get("components"), list):
        comps = []
        for c in params["components"]:
            if isinstance(c, dict) and isinstance(c.get("spec"), dict):
                c = dict(c)
                c["spec"] = FamilySpec.from_dict(c["spec"])
            comps.append(c)
        params["components"] = comps
    return params


def _params_dict(spec: FamilySpec) -> dict:
    out = dict(spec.params)
    if spec.kind == "span_lattice":
        out["base"] = spec.params["base"].to_dict()
    if spec.kind == "mixture_sequence":
        out["components"] = [
            {**c, "spec": c["spec"].to_dict()} for c in spec.params["components"]
        ]
    return out


def summand_law(spec: FamilySpec) -> LatticePmf:
    """Single-summand law of a non-mixture spec."""
    if spec.kind == "bernoulli":
        p = spec.params["p"]
        return make_pmf(0, [1.0 - p, p])
    if spec.kind == "uniform_int":
        lo, hi = spec.params["lo"], spec.params["hi"]
        k = hi - lo + 1
        return make_pmf(lo, [1.0 / k] * k)
    if spec.kind == "finite":
        return make_pmf(spec.params["offset"], spec.params["weights"])
    if spec.kind == "span_lattice":
        base = summand_law(spec.params["base"])
        d = spec.params["d"]
        w = np.zeros((len(base.weights) - 1) * d + 1)
        w[::d] = base.weights
        return make_pmf(base.offset * d, w, trimmed_mass=base.trimmed_mass,
                        unnormalized=True)
    raise ValueError("kind: %r has no single summand law" % (spec.kind,))


def realize(spec: FamilySpec) -> list[LatticePmf]:
    """Laws of the n summands, in order.

    Mixtures are deterministic: rate components claim every ceil(1/rate)-th
    position (1-based) not already claimed, in component order; count
    components then fill the remaining positions in order, and their counts
    must cover those positions exactly.
    """
    if spec.kind != "mixture_sequence":
        return [summand_law(spec)] * spec.n

    n = spec.n
    slots: list = [None] * n
    remaining = n
    comps = spec.params["components"]
    for c in comps:
        if "rate" in c:
            law = summand_law(c["spec"])
            step = math.ceil(1.0 / c["rate"])
            for pos in range(step - 1, n, step):
                if slots[pos] is None:
                    slots[pos] = law
                    remaining -= 1
    counts = sum(c["count"] for c in comps if "count" in c)
    if counts != remaining:
        raise ValueError(
            "components: counts sum to %d but %d positions remain" % (counts, remaining)
        )
    fill = iter(
        law
        for c in comps
        if "count" in c
        for law in [summand_law(c["spec"])] * c["count"]
    )
    for pos in range(n):
        if slots[pos] is None:
            slots[pos] = next(fill)
    return slots


def sum_law(spec: FamilySpec) -> LatticePmf:
    """Law of the sum of all n summands.

    iid runs are raised by binary exponentiation, so the iid kinds cost
    O(log n) convolutions and mixtures cost one power per block.
    """
    laws = realize(spec)
    result = None
    i = 0
    while i < len(laws):
        j = i
        while j < len(laws) and laws[j] is laws[i]:
            j += 1
        block = iid_power(laws[i], j - i)
        result = block if result is None else convolve_fft(result, block)
        i = j
    return result
