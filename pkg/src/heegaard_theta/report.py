"""The structured report emitted by ``heegaard-theta compute``."""

import json
from dataclasses import asdict, dataclass
from importlib import resources


def exponent_key(vec):
    return ",".join(str(x) for x in vec)


def coeff_map(poly):
    """``{"e1,e2,...": coefficient}`` in canonical term order."""
    return {exponent_key(k): c for k, c in poly.items()}


def int_map(values):
    return {str(k): v for k, v in sorted(values.items())}


@dataclass
class ComputeReport:
    b1: int
    torsion: list
    alexander: dict
    theta: object
    turaev: object
    checks: dict

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, d):
        return cls(**{k: d[k] for k in ("b1", "torsion", "alexander", "theta", "turaev", "checks")})

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self):
        """One ``key = value`` line per field; values are compact JSON."""
        lines = []
        for key, value in self.to_dict().items():
            if key in _NESTED and isinstance(value, dict):
                for sub, v in value.items():
                    lines.append(f"{key}.{sub} = {_compact(v)}")
            else:
                lines.append(f"{key} = {_compact(value)}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        d = {}
        for line in text.splitlines():
            if not line.strip():
                continue
            key, _, value = line.partition(" = ")
            value = json.loads(value)
            head, dot, sub = key.partition(".")
            if dot:
                d.setdefault(head, {})[sub] = value
            else:
                d[head] = value
        return cls.from_dict(d)


_NESTED = ("alexander", "turaev", "checks")


def _compact(value):
    return json.dumps(value, separators=(", ", ": "))


def load_schema():
    return json.loads(resources.files(__package__).joinpath("report.schema.json").read_text())
