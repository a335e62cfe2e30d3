from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial, coefficients in ascending degree.

    Trailing zeros are stripped on construction, so ``Polynomial(())`` is the
    zero polynomial and its degree is ``-1``.
    """

    coeffs: tuple

    def __init__(self, coeffs: Iterable):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def almost_equal(self, other: "Polynomial | Sequence", tol: float = 1e-12) -> bool:
        o = other.coeffs if isinstance(other, Polynomial) else tuple(other)
        n = max(len(self.coeffs), len(o))
        return all(abs(complex(self[k]) - complex(o[k] if k < len(o) else 0)) <= tol for k in range(n))
