from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class EvalResult:
    """A value with the method that produced it and an absolute error estimate."""

    value: complex
    method: str
    err_est: float

    def __post_init__(self):
        object.__setattr__(self, "value", complex(self.value))
        object.__setattr__(self, "err_est", float(self.err_est))
        if not self.err_est >= 0:
            raise ValueError("err_est must be non-negative")

    def __complex__(self):
        return self.value


@dataclass(frozen=True)
class QuadratureSpec:
    target_rel_err: float = 1e-12
    max_levels: int = 10
    split_point: float = 1.0

    def __post_init__(self):
        if self.target_rel_err < 1e-13:
            raise ValueError("target_rel_err below 1e-13 is not resolvable in binary64")
        if self.split_point <= 0:
            raise ValueError("split_point must be positive")
        if self.max_levels < 3:
            raise ValueError("max_levels must be >= 3")
