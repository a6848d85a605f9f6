"""Flat key-value scenario configuration files.

Format: optional top-level `name = ...`, then `[system]` (required, exactly
once), `[solver]` and `[detection]` (optional). One `key = value` pair per
line, `#` starts a comment line, blank lines ignored. Errors carry the
offending line number.

    name = demo
    [system]
    alpha = 0.4, 0.9
    q1 = 0.5
    q2 = 1.5
    p11 = 1.5
    p12 = 3.6
    p21 = 0.5
    p22 = 2.4
    x0 = 1.0
    y0 = 1.2
    [solver]
    T = 1.5
    N = 4096
    [detection]
    threshold = 1e8
    budget = 5

`alpha` accepts a single value or a comma-separated sweep. `q1` and `q2`
default to 0; `N` defaults to 4096; `threshold` to 1e8; `budget` to 5;
`T` has no default and is required by the solve and detect commands.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .errors import ConfigError

__all__ = ["ScenarioConfig", "parse_config", "load_config"]

_SECTION_KEYS = {
    "system": ("alpha", "q1", "q2", "p11", "p12", "p21", "p22", "x0", "y0"),
    "solver": ("T", "N"),
    "detection": ("threshold", "budget"),
}


@dataclass(frozen=True)
class ScenarioConfig:
    name: str
    alphas: tuple[float, ...]
    q1: float
    q2: float
    p11: float
    p12: float
    p21: float
    p22: float
    x0: float
    y0: float
    T: Optional[float]
    N: int
    threshold: float
    budget: int


def _parse_float(raw: str, key: str, line_no: int) -> float:
    try:
        value = float(raw)
    except ValueError:
        raise ConfigError(f"line {line_no}: {key} is not a number: {raw!r}") from None
    if value != value or value in (float("inf"), float("-inf")):
        raise ConfigError(f"line {line_no}: {key} must be finite, got {raw!r}")
    return value


def _parse_int(raw: str, key: str, line_no: int) -> int:
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"line {line_no}: {key} is not an integer: {raw!r}") from None


def parse_config(text: str, default_name: str = "scenario") -> ScenarioConfig:
    """Parse config text into a ScenarioConfig, validating field ranges."""
    section = None
    seen_sections: list[str] = []
    values: dict[str, tuple[str, int]] = {}
    name = default_name

    for line_no, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1].strip()
            if section not in _SECTION_KEYS:
                raise ConfigError(f"line {line_no}: unknown section [{section}]")
            if section in seen_sections:
                raise ConfigError(f"line {line_no}: duplicate section [{section}]")
            seen_sections.append(section)
            continue
        if "=" not in line:
            raise ConfigError(f"line {line_no}: expected key = value, got {line!r}")
        key, _, raw = line.partition("=")
        key = key.strip()
        raw = raw.strip()
        if not raw:
            raise ConfigError(f"line {line_no}: empty value for {key!r}")
        if section is None:
            if key != "name":
                raise ConfigError(
                    f"line {line_no}: key {key!r} before any section (only 'name' may appear here)"
                )
            name = raw
            continue
        if key not in _SECTION_KEYS[section]:
            raise ConfigError(f"line {line_no}: unknown key {key!r} in [{section}]")
        if key in values:
            raise ConfigError(f"line {line_no}: duplicate key {key!r}")
        values[key] = (raw, line_no)

    if "system" not in seen_sections:
        raise ConfigError("missing [system] section")

    def need(key: str) -> tuple[str, int]:
        if key not in values:
            raise ConfigError(f"missing required key {key!r} in [system]")
        return values[key]

    raw, ln = need("alpha")
    alphas = tuple(_parse_float(part.strip(), "alpha", ln) for part in raw.split(","))
    for a in alphas:
        if not (0.0 < a <= 1.0):
            raise ConfigError(f"line {ln}: alpha must lie in (0, 1], got {a}")

    def sys_float(key: str, default: Optional[float] = None) -> float:
        if key not in values:
            if default is None:
                raise ConfigError(f"missing required key {key!r} in [system]")
            return default
        raw, ln = values[key]
        return _parse_float(raw, key, ln)

    q1 = sys_float("q1", 0.0)
    q2 = sys_float("q2", 0.0)
    exps = {k: sys_float(k) for k in ("p11", "p12", "p21", "p22")}
    x0 = sys_float("x0")
    y0 = sys_float("y0")
    for key, v in [("q1", q1), ("q2", q2)] + list(exps.items()):
        if v < 0.0:
            ln = values[key][1] if key in values else 0
            raise ConfigError(f"line {ln}: {key} must be nonnegative, got {v}")
    for key, v in (("x0", x0), ("y0", y0)):
        if v <= 0.0:
            ln = values[key][1]
            raise ConfigError(f"line {ln}: {key} must be positive, got {v}")

    T: Optional[float] = None
    if "T" in values:
        raw, ln = values["T"]
        T = _parse_float(raw, "T", ln)
        if T <= 0.0:
            raise ConfigError(f"line {ln}: T must be positive, got {T}")
    if "N" in values:
        raw, ln = values["N"]
        n = _parse_int(raw, "N", ln)
        if n < 1:
            raise ConfigError(f"line {ln}: N must be >= 1, got {n}")
    else:
        n = 4096

    if "threshold" in values:
        raw, ln = values["threshold"]
        threshold = _parse_float(raw, "threshold", ln)
        if threshold <= 0.0:
            raise ConfigError(f"line {ln}: threshold must be positive, got {threshold}")
    else:
        threshold = 1e8
    if "budget" in values:
        raw, ln = values["budget"]
        budget = _parse_int(raw, "budget", ln)
        if budget < 0:
            raise ConfigError(f"line {ln}: budget must be nonnegative, got {budget}")
    else:
        budget = 5

    return ScenarioConfig(
        name=name, alphas=alphas, q1=q1, q2=q2,
        p11=exps["p11"], p12=exps["p12"], p21=exps["p21"], p22=exps["p22"],
        x0=x0, y0=y0, T=T, N=n, threshold=threshold, budget=budget,
    )


def load_config(path: str | Path) -> ScenarioConfig:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return parse_config(text, default_name=path.stem)
