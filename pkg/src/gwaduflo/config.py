"""Line-oriented algebra configs.

::

    # comment
    name = rank2
    n = 2
    b = 1, 3/2
    t1 = roots(-2, 1)
    t2 = roots(-3, 3)
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional

from .algebra import GwaSpec
from .exactnum import UnivariateFactored, parse_gauss

BUNDLED = ("weyl1", "two_breaks", "rank2", "sl2_chi3", "sl2_chi0")


class ConfigError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


@dataclass(frozen=True)
class GwaConfig:
    spec: GwaSpec
    name: Optional[str] = None
    description: Optional[str] = None


_KEY_RE = re.compile(r"^(n|b|name|description|t(\d+))$")
_ROOTS_RE = re.compile(r"^roots\s*\((.*)\)$")


def _split_literals(text: str, line: int, col: int) -> list:
    out = []
    offset = 0
    for part in text.split(","):
        lead = len(part) - len(part.lstrip())
        lit = part.strip()
        try:
            out.append(parse_gauss(lit))
        except ValueError:
            raise ConfigError(f"invalid number literal {lit!r}", line, col + offset + lead) from None
        offset += len(part) + 1
    return out


def parse_config(text: str) -> GwaConfig:
    values = {}
    where = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if "=" not in line:
            col = len(line) - len(line.lstrip()) + 1
            raise ConfigError("expected 'key = value'", lineno, col)
        key_part, val_part = line.split("=", 1)
        key = key_part.strip()
        key_col = len(key_part) - len(key_part.lstrip()) + 1
        val_col = len(key_part) + 2 + (len(val_part) - len(val_part.lstrip()))
        if not _KEY_RE.match(key):
            raise ConfigError(f"unknown key {key!r}", lineno, key_col)
        if key in values:
            raise ConfigError(f"duplicate key {key!r}", lineno, key_col)
        values[key] = val_part.strip()
        where[key] = (lineno, val_col)

    if "b" not in values:
        raise ConfigError("missing key 'b'")
    b = _split_literals(values["b"], *where["b"])
    for i, bi in enumerate(b):
        if not bi:
            raise ConfigError(f"b_{i + 1} = 0 is not allowed: steps must satisfy b_i != 0", *where["b"])

    if "n" in values:
        try:
            n = int(values["n"])
        except ValueError:
            raise ConfigError("n must be a positive integer", *where["n"]) from None
        if n < 1:
            raise ConfigError("n must be a positive integer", *where["n"])
        if n != len(b):
            raise ConfigError(f"n = {n} but b lists {len(b)} steps", *where["b"])
    else:
        n = len(b)

    ts = []
    for k in range(1, n + 1):
        key = f"t{k}"
        if key not in values:
            raise ConfigError(f"missing key '{key}'")
        line, col = where[key]
        m = _ROOTS_RE.match(values[key])
        if m is None:
            raise ConfigError(f"{key} must have the form roots(z1, ..., zs)", line, col)
        inner = m.group(1)
        if not inner.strip():
            raise ConfigError(f"{key} has no roots: t_i must be nonconstant", line, col)
        roots = _split_literals(inner, line, col + values[key].index("(") + 1)
        ts.append(UnivariateFactored(k - 1, tuple(roots)))
    extra = [k for k in values if k.startswith("t") and k not in {f"t{j}" for j in range(1, n + 1)}]
    if extra:
        raise ConfigError(f"key {extra[0]!r} exceeds rank n = {n}", where[extra[0]][0], 1)

    return GwaConfig(GwaSpec(tuple(b), tuple(ts)), values.get("name"), values.get("description"))


def bundled_config_text(name: str) -> str:
    stem = name[:-4] if name.endswith(".cfg") else name
    if stem not in BUNDLED:
        raise FileNotFoundError(f"no bundled config named {name!r}")
    return resources.files("gwaduflo").joinpath("configs", stem + ".cfg").read_text()


def load_config(path_or_name: str) -> GwaConfig:
    """Read a config file; bare names fall back to the bundled examples."""
    p = Path(path_or_name)
    if p.is_file():
        return parse_config(p.read_text())
    return parse_config(bundled_config_text(p.name))
