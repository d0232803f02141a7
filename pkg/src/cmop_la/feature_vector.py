"""Named feature values for one (instance, sample-set) pair.

Degenerate or undefined entries keep a numeric value (0 by convention)
and are additionally listed in ``flags`` so that aggregation across
sample sets can skip them.
"""

from dataclasses import dataclass, field


@dataclass
class FeatureVector:
    values: dict = field(default_factory=dict)
    flags: set = field(default_factory=set)

    def set(self, name: str, value: float, flagged: bool = False):
        self.values[name] = float(value)
        if flagged:
            self.flags.add(name)

    def merge(self, other: "FeatureVector") -> "FeatureVector":
        overlap = self.values.keys() & other.values.keys()
        if overlap:
            raise ValueError(f"duplicate feature names: {sorted(overlap)}")
        self.values.update(other.values)
        self.flags.update(other.flags)
        return self

    def __getitem__(self, name: str) -> float:
        return self.values[name]

    def __contains__(self, name: str) -> bool:
        return name in self.values
