"""Flat ``key = value`` suite configuration."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..exactalg import field_name, parse_field

TYPES = ("orthogonal", "symplectic", "unitary", "unitary-inner")
SUITES = ("prop-neat", "lem-PC", "keepstype", "capmaxdim", "cap2-form", "neat-ext", "neatquad", "biquadratic",
          "albert-rowen", "springer")
DEFAULT_SAMPLES = 20
DEFAULT_BUDGET = 10**6


class ConfigError(ValueError):
    pass


@dataclass
class SuiteConfig:
    fields: list = field(default_factory=list)
    types: list = field(default_factory=list)
    degrees: list = field(default_factory=list)
    type_degrees: dict = field(default_factory=dict)
    seed: int = 0
    suites: list = field(default_factory=list)
    samples: dict = field(default_factory=dict)
    budget: int = DEFAULT_BUDGET
    instances_per_point: int = 1

    def degrees_for(self, typ):
        return self.type_degrees.get(typ, self.degrees)

    def grid(self):
        """Grid points (field name, type, degree) in a fixed order."""
        out = []
        for f in self.fields:
            for t in self.types:
                for d in self.degrees_for(t):
                    out.append((f, t, d))
        return out

    def samples_for(self, suite):
        return self.samples.get(suite, self.samples.get("*", DEFAULT_SAMPLES))

    def echo(self):
        return {"fields": list(self.fields), "types": list(self.types), "degrees": list(self.degrees),
                "type_degrees": {k: list(v) for k, v in sorted(self.type_degrees.items())}, "seed": self.seed,
                "suites": list(self.suites), "samples": dict(sorted(self.samples.items())), "budget": self.budget,
                "instances_per_point": self.instances_per_point}


def _list(value):
    return [x.strip() for x in value.split(",") if x.strip()]


def _int(key, value):
    try:
        return int(value)
    except ValueError:
        raise ConfigError(f"{key}: expected an integer, got {value!r}") from None


def check_point(typ, d):
    if typ not in TYPES:
        raise ConfigError(f"unknown type {typ!r}")
    if d < 1:
        raise ConfigError(f"degree must be positive, got {d}")
    if typ == "symplectic" and d % 2:
        raise ConfigError(f"symplectic degree must be even, got {d}")


def parse_config(text: str) -> SuiteConfig:
    cfg = SuiteConfig()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        if key == "fields":
            names = _list(value)
            try:
                cfg.fields = [field_name(parse_field(n)) for n in names]
            except ValueError as exc:
                raise ConfigError(f"fields: {exc}") from None
        elif key == "types":
            cfg.types = _list(value)
        elif key == "degrees":
            cfg.degrees = [_int(key, v) for v in _list(value)]
        elif key.startswith("degrees."):
            cfg.type_degrees[key.split(".", 1)[1]] = [_int(key, v) for v in _list(value)]
        elif key == "seed":
            cfg.seed = _int(key, value) % 2**64
        elif key == "suites":
            cfg.suites = _list(value)
        elif key == "samples":
            cfg.samples["*"] = _int(key, value)
        elif key.startswith("samples."):
            cfg.samples[key.split(".", 1)[1]] = _int(key, value)
        elif key == "budget":
            cfg.budget = _int(key, value)
        elif key == "instances_per_point":
            cfg.instances_per_point = _int(key, value)
        else:
            raise ConfigError(f"unknown key {key!r}")
    validate(cfg)
    return cfg


def validate(cfg: SuiteConfig):
    for t in cfg.types:
        if t not in TYPES:
            raise ConfigError(f"unknown type {t!r}")
    for t in cfg.type_degrees:
        if t not in TYPES:
            raise ConfigError(f"degrees override for unknown type {t!r}")
    for s in cfg.suites:
        if s not in SUITES:
            raise ConfigError(f"unknown suite {s!r}")
    for s in cfg.samples:
        if s != "*" and s not in SUITES:
            raise ConfigError(f"samples override for unknown suite {s!r}")
    for t in cfg.types:
        for d in cfg.degrees_for(t):
            check_point(t, d)
    for _, t, d in cfg.grid():
        check_point(t, d)
    if cfg.budget < 1 or cfg.instances_per_point < 1:
        raise ConfigError("budget and instances_per_point must be positive")
    return cfg
