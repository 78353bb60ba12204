"""Flat key--value problem configs.

Grammar (one statement per line)::

    # comment, blank lines ignored
    key = value

Keys::

    R                   disk radius (number, > 0)
    alpha               decay constant (number, > 0)
    rho                 charge radius (number, > R)
    N                   collocation count (integer, >= 2)
    boundary.kind       "pulse" or "analytic"
    boundary.kernel     pulse only: "exp_sqrt" (e^{-alpha r}/sqrt(r)) or
                        "gauss" (e^{-r^2})
    boundary.P_radius   pulse only: |P| (number, < R)
    boundary.P_angle    pulse only: arg(P); angle value
    boundary.expression analytic only: trigonometric polynomial, e.g.
                        "1.5 + 0.5*cos(1*theta) - 0.25*sin(3*theta)"

Angle values are plain numbers or multiples of pi: ``pi/3``, ``2*pi/7``,
``0.5*pi``, ``-pi``.  The analytic expression grammar is a sum of constant
terms and ``c*cos(k*theta)`` / ``c*sin(k*theta)`` terms, nothing more.
"""

from __future__ import annotations

import re
from pathlib import Path

import numpy as np

from .problem import (AnalyticData, BoundaryData, ProblemSpec, PulseData,
                      exp_sqrt_kernel, gauss_kernel, make_problem)

__all__ = [
    "ConfigError",
    "load_problem",
    "parse_angle",
    "parse_config",
    "parse_trig_expression",
    "problem_from_config",
]

_KNOWN_KEYS = {
    "R", "alpha", "rho", "N",
    "boundary.kind", "boundary.kernel",
    "boundary.P_radius", "boundary.P_angle",
    "boundary.expression",
}

_NUM = r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"


class ConfigError(ValueError):
    """Malformed configuration; message carries the line number or key."""


def parse_config(text: str, source: str = "<config>") -> dict[str, str]:
    """Parse ``key = value`` lines into a dict, validating key names."""
    out: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key not in _KNOWN_KEYS:
            raise ConfigError(f"{source}:{lineno}: unknown key {key!r}")
        if not value:
            raise ConfigError(f"{source}:{lineno}: empty value for key {key!r}")
        if key in out:
            raise ConfigError(f"{source}:{lineno}: duplicate key {key!r}")
        out[key] = value
    return out


def parse_angle(text: str) -> float:
    """Angle literal: a plain number, or (coef*)pi(/div) with numeric parts."""
    text = text.strip()
    m = re.fullmatch(rf"({_NUM})", text)
    if m:
        return float(m.group(1))
    m = re.fullmatch(rf"(?:({_NUM})\s*\*\s*)?(-?)\s*pi(?:\s*/\s*({_NUM}))?", text)
    if m:
        coef = float(m.group(1)) if m.group(1) else 1.0
        if m.group(2):
            coef = -coef
        div = float(m.group(3)) if m.group(3) else 1.0
        if div == 0.0:
            raise ConfigError(f"division by zero in angle {text!r}")
        return coef * np.pi / div
    raise ConfigError(f"cannot parse angle {text!r}")


_UNSIGNED_NUM = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_TERM_RE = re.compile(
    rf"\s*(?P<sign>[+-])?\s*"
    rf"(?:"
    rf"(?:(?P<coef>{_UNSIGNED_NUM})\s*\*?\s*)?"
    rf"(?P<fn>cos|sin)\(\s*(?P<k>\d+)\s*\*?\s*theta\s*\)"
    rf"|(?P<const>{_UNSIGNED_NUM})"
    rf")\s*")


def parse_trig_expression(text: str):
    """Parse a sum of constants and c*cos(k*theta) / c*sin(k*theta) terms.

    Returns a vectorized callable S(theta).
    """
    terms: list[tuple[float, str, int]] = []  # (coef, "const"|"cos"|"sin", k)
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ConfigError(f"cannot parse expression near {text[pos:][:30]!r}")
        if not first and m.group("sign") is None:
            raise ConfigError(f"missing +/- between terms near {text[pos:][:30]!r}")
        sign = -1.0 if m.group("sign") == "-" else 1.0
        if m.group("const") is not None:
            terms.append((sign * float(m.group("const")), "const", 0))
        else:
            coef = float(m.group("coef")) if m.group("coef") else 1.0
            terms.append((sign * coef, m.group("fn"), int(m.group("k"))))
        pos = m.end()
        first = False
    if not terms:
        raise ConfigError("empty boundary expression")

    def S(theta):
        theta = np.asarray(theta, dtype=float)
        out = np.zeros_like(theta)
        for coef, kind, k in terms:
            if kind == "const":
                out = out + coef
            elif kind == "cos":
                out = out + coef * np.cos(k * theta)
            else:
                out = out + coef * np.sin(k * theta)
        return out

    return S


def problem_from_config(cfg: dict[str, str], source: str = "<config>") -> ProblemSpec:
    """Build a validated problem from parsed key--value pairs."""
    def require(key: str) -> str:
        if key not in cfg:
            raise ConfigError(f"{source}: missing required key {key!r}")
        return cfg[key]

    def number(key: str) -> float:
        try:
            return float(require(key))
        except ValueError as exc:
            raise ConfigError(f"{source}: key {key!r}: {exc}") from None

    R = number("R")
    alpha = number("alpha")
    rho = number("rho")
    try:
        N = int(require("N"))
    except ValueError:
        raise ConfigError(f"{source}: key 'N' must be an integer, got {cfg['N']!r}") from None

    kind = require("boundary.kind")
    boundary: BoundaryData
    if kind == "pulse":
        kernel_name = require("boundary.kernel")
        if kernel_name == "exp_sqrt":
            kernel = exp_sqrt_kernel(alpha)
        elif kernel_name == "gauss":
            kernel = gauss_kernel()
        else:
            raise ConfigError(
                f"{source}: unknown boundary.kernel {kernel_name!r} "
                f"(choose exp_sqrt or gauss)")
        p_radius = number("boundary.P_radius")
        p_angle = parse_angle(require("boundary.P_angle"))
        boundary = PulseData(kernel=kernel, P=p_radius * np.exp(1j * p_angle))
    elif kind == "analytic":
        S = parse_trig_expression(require("boundary.expression"))
        boundary = AnalyticData(S=S)
    else:
        raise ConfigError(
            f"{source}: unknown boundary.kind {kind!r} (choose pulse or analytic)")

    try:
        return make_problem(R, alpha, rho, N, boundary)
    except ValueError as exc:
        raise ConfigError(f"{source}: {exc}") from None


def load_problem(path: str | Path) -> ProblemSpec:
    """Read and validate a config file."""
    path = Path(path)
    cfg = parse_config(path.read_text(encoding="utf-8"), source=str(path))
    return problem_from_config(cfg, source=str(path))
