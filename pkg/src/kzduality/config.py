"""
Run bounds with precedence flags > environment (KZD_*) > config file.

The config file holds ``key = value`` lines; ``#`` starts a comment,
``[section]`` headers are ignored, and string values may be quoted::

    max_weight = 10
    max_n = 6
    threads = 2
"""
from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

DEFAULT_FILE = "kzduality.toml"


@dataclass(frozen=True)
class Bounds:
    max_weight: int = 12
    max_n: int = 8
    max_r: int = 4
    window: int = 10
    threads: int = 1


class ConfigError(ValueError):
    pass


def parse_config_text(text):
    out = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line or (line.startswith("[") and line.endswith("]")):
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key = value")
        key, val = (s.strip() for s in line.split("=", 1))
        if len(val) >= 2 and val[0] == val[-1] and val[0] in "\"'":
            val = val[1:-1]
        out[key] = val
    return out


def _coerce(updates, source):
    names = {f.name for f in fields(Bounds)}
    out = {}
    for k, v in updates.items():
        if k not in names:
            raise ConfigError(f"{source}: unknown key {k!r}")
        try:
            out[k] = int(v)
        except (TypeError, ValueError):
            raise ConfigError(f"{source}: {k} must be an integer, got {v!r}") from None
        if out[k] < 1:
            raise ConfigError(f"{source}: {k} must be positive")
    return out


def load_bounds(flags=None, env=None, path=None):
    """Merge defaults, config file, environment and explicit flags."""
    env = os.environ if env is None else env
    b = Bounds()
    if path is None and os.path.exists(DEFAULT_FILE):
        path = DEFAULT_FILE
    if path is not None:
        with open(path) as fh:
            b = replace(b, **_coerce(parse_config_text(fh.read()), path))
    from_env = {f.name: env[f"KZD_{f.name.upper()}"] for f in fields(Bounds)
                if f"KZD_{f.name.upper()}" in env}
    b = replace(b, **_coerce(from_env, "environment"))
    if flags:
        b = replace(b, **_coerce({k: v for k, v in flags.items() if v is not None}, "flags"))
    return b
