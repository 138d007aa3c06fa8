"""Ocean current fields: position (and time) to current velocity in m/s.

The wave and helix fields are curve families tiled over the map by a
free offset constant, so each point lies on exactly one curve. The
current there points along that curve's tangent with a speed that grows
linearly with height (y in 2D, z in 3D).
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np


def _vec(pos, dims):
    p = np.asarray(pos, dtype=float)
    if dims is not None and p.shape != (dims,):
        raise ValueError(f"expected a {dims}-D position, got shape {p.shape}")
    return p


def _check_speed_law(f):
    if f.speed_slope < 0 or f.speed_offset < 0:
        raise ValueError("speed parameters must be >= 0")


class CurrentField:
    variant = ""
    dims: Optional[int] = None

    def sample(self, pos, t: float = 0.0) -> np.ndarray:
        raise NotImplementedError

    def __call__(self, pos, t: float = 0.0) -> np.ndarray:
        return self.sample(pos, t)

    def params(self) -> dict:
        return asdict(self)

    def to_dict(self) -> dict:
        return {"variant": self.variant, "params": self.params()}


@dataclass(frozen=True)
class Zero(CurrentField):
    variant = "zero"

    def sample(self, pos, t=0.0):
        return np.zeros_like(_vec(pos, None))


@dataclass(frozen=True)
class Uniform(CurrentField):
    """Constant current.

    2D fields take ``direction_deg`` (counter-clockwise from +x). 3D fields
    also set ``elevation_deg`` (angle above the x-y plane).
    """

    speed: float
    direction_deg: float = 0.0
    elevation_deg: Optional[float] = None
    variant = "uniform"

    def __post_init__(self):
        if self.speed < 0:
            raise ValueError("current speed must be >= 0")

    @property
    def dims(self):
        return 2 if self.elevation_deg is None else 3

    @property
    def vector(self) -> np.ndarray:
        az = math.radians(self.direction_deg)
        if self.elevation_deg is None:
            return self.speed * np.array([math.cos(az), math.sin(az)])
        el = math.radians(self.elevation_deg)
        return self.speed * np.array([math.cos(el) * math.cos(az),
                                      math.cos(el) * math.sin(az),
                                      math.sin(el)])

    def sample(self, pos, t=0.0):
        _vec(pos, self.dims)
        return self.vector

    def params(self):
        d = {"speed": self.speed, "direction_deg": self.direction_deg}
        if self.elevation_deg is not None:
            d["elevation_deg"] = self.elevation_deg
        return d


@dataclass(frozen=True)
class Wave2D(CurrentField):
    """Flow along the curves x = A sin(k y) + b, speed (y + offset) * slope."""

    amplitude: float = 5.0
    wavenumber: float = 0.1
    speed_slope: float = 0.05
    speed_offset: float = 1.0
    variant = "wave2d"
    dims = 2

    def __post_init__(self):
        _check_speed_law(self)

    def direction(self, y: float) -> np.ndarray:
        d = np.array([self.amplitude * self.wavenumber * math.cos(self.wavenumber * y), 1.0])
        return d / math.hypot(d[0], d[1])

    def speed(self, y: float) -> float:
        return (y + self.speed_offset) * self.speed_slope

    def sample(self, pos, t=0.0):
        _, y = _vec(pos, 2)
        return self.speed(y) * self.direction(y)


@dataclass(frozen=True)
class Helix3D(CurrentField):
    """Flow along the helices (R sin(k z) + g, R cos(k z) + h, z), speed (z + offset) * slope."""

    radius: float = 10.0
    wavenumber: float = 0.1
    speed_slope: float = 0.1
    speed_offset: float = 1.0
    variant = "helix3d"
    dims = 3

    def __post_init__(self):
        _check_speed_law(self)

    def direction(self, z: float) -> np.ndarray:
        rk = self.radius * self.wavenumber
        d = np.array([rk * math.cos(self.wavenumber * z),
                      -rk * math.sin(self.wavenumber * z),
                      1.0])
        return d / math.sqrt(d @ d)

    def speed(self, z: float) -> float:
        return (z + self.speed_offset) * self.speed_slope

    def sample(self, pos, t=0.0):
        _, _, z = _vec(pos, 3)
        return self.speed(z) * self.direction(z)


VARIANTS = {cls.variant: cls for cls in (Zero, Uniform, Wave2D, Helix3D)}


def field_from_dict(d: dict) -> CurrentField:
    variant = d.get("variant")
    if variant not in VARIANTS:
        raise ValueError(f"unknown current variant {variant!r}; "
                         f"expected one of {sorted(VARIANTS)}")
    return VARIANTS[variant](**d.get("params", {}))
