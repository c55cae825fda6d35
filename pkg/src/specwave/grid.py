"""Uniform Dirichlet grid on a symmetric interval."""

from dataclasses import dataclass
from functools import cached_property

import numpy as np


@dataclass(frozen=True)
class Grid:
    """Interior nodes of a uniform mesh on [-half_length, half_length].

    The endpoints carry homogeneous Dirichlet data and are not stored.
    Node k (0-based) sits at ``-half_length + (k + 1) * spacing``.
    """

    half_length: float
    interior_count: int

    def __post_init__(self) -> None:
        if self.half_length <= 0.0:
            raise ValueError("half_length must be positive")
        if self.interior_count < 3:
            raise ValueError("need at least 3 interior nodes")

    @property
    def spacing(self) -> float:
        return 2.0 * self.half_length / (self.interior_count + 1)

    @property
    def h(self) -> float:
        return self.spacing

    @cached_property
    def nodes(self) -> np.ndarray:
        k = np.arange(1, self.interior_count + 1)
        return -self.half_length + k * self.spacing
