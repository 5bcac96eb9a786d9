"""Upper bounds on ``||A^{-1}||_inf`` for SDD and Nekrasov matrices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .classify import classify_nekrasov, classify_sdd
from .core import as_matrix
from .errors import NotNekrasov, NotSDD
from .oracle import exact_inverse_inf_norm
from .rowsums import nekrasov_row_sums, z_weights

SOUNDNESS_RTOL = 1e-12


@dataclass(frozen=True)
class BoundReport:
    varah: Optional[float] = None
    bound2: Optional[float] = None
    bound3: Optional[float] = None
    exact: Optional[float] = None

    @property
    def best(self) -> Optional[float]:
        present = [b for b in (self.varah, self.bound2, self.bound3) if b is not None]
        return min(present) if present else None

    @property
    def applicable(self) -> bool:
        return self.best is not None

    def violations(self, rtol: float = SOUNDNESS_RTOL) -> list[str]:
        """Names of bounds that fall below the exact norm beyond ``rtol``."""
        if self.exact is None:
            return []
        floor = self.exact * (1.0 - rtol)
        return [
            name
            for name in ("varah", "bound2", "bound3")
            if getattr(self, name) is not None and getattr(self, name) < floor
        ]


def varah_bound(a) -> float:
    """``1 / min_i (|a_ii| - r_i(A))``; raises NotSDD outside the SDD class."""
    ok, margins = classify_sdd(a)
    if not ok:
        raise NotSDD("Varah's bound needs a strictly diagonally dominant matrix")
    return float(1.0 / margins.min())


def _nekrasov_parts(a):
    ok, _ = classify_nekrasov(a)
    if not ok:
        raise NotNekrasov("bound needs a Nekrasov matrix")
    d = np.abs(np.diag(as_matrix(a)))
    return d, nekrasov_row_sums(a), z_weights(a)


def nekrasov_bound_2(a) -> float:
    """``max_i(z_i/|a_ii|) / (1 - max_i(h_i/|a_ii|))``."""
    d, h, z = _nekrasov_parts(a)
    return float((z / d).max() / (1.0 - (h / d).max()))


def nekrasov_bound_3(a) -> float:
    """``max_i z_i / min_i(|a_ii| - h_i)``."""
    d, h, z = _nekrasov_parts(a)
    return float(z.max() / (d - h).min())


def best_bound(a, exact: bool = False) -> BoundReport:
    """Every bound that applies to ``a``; optionally the exact norm too."""
    a = as_matrix(a)
    varah = varah_bound(a) if classify_sdd(a)[0] else None
    b2 = b3 = None
    if classify_nekrasov(a)[0]:
        b2, b3 = nekrasov_bound_2(a), nekrasov_bound_3(a)
    ex = exact_inverse_inf_norm(a) if exact else None
    return BoundReport(varah=varah, bound2=b2, bound3=b3, exact=ex)
