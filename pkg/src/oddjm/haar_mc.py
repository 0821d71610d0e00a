"""Monte Carlo sampling of Haar-distributed orthogonal matrices.

This is the only floating-point module.  A matrix of independent standard
normals is QR-factorised and the columns of Q are rescaled by the signs of
diag(R); the result is exactly Haar distributed on O(N).

Random numbers come from numpy's PCG64 bit generator seeded with the given
integer, and normals from its ziggurat sampler.  Both are specified by numpy
independently of the platform, so a (seed, samples) pair fixes the stream.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt
from typing import Sequence

import numpy as np

__all__ = ["OrthogonalSample", "sample_orthogonal", "sample_orthogonal_batch", "mc_moment"]

BATCH = 4096


@dataclass(frozen=True)
class OrthogonalSample:
    N: int
    entries: np.ndarray

    def residual(self) -> float:
        """``max |G^T G - I|`` entrywise."""
        g = self.entries
        return float(np.abs(g.T @ g - np.eye(self.N)).max())

    def det(self) -> float:
        return float(np.linalg.det(self.entries))


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _haar_from_gaussian(z: np.ndarray) -> np.ndarray:
    q, r = np.linalg.qr(z)
    d = np.sign(np.diagonal(r, axis1=-2, axis2=-1))
    d[d == 0] = 1.0
    return q * d[..., None, :]


def _check_N(N: int) -> None:
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")


def sample_orthogonal(N: int, seed: int) -> OrthogonalSample:
    _check_N(N)
    z = _rng(seed).standard_normal((N, N))
    return OrthogonalSample(N, _haar_from_gaussian(z))


def sample_orthogonal_batch(N: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """Array of shape ``(count, N, N)`` of independent Haar matrices."""
    _check_N(N)
    return _haar_from_gaussian(rng.standard_normal((count, N, N)))


def mc_moment(
    i: Sequence[int], j: Sequence[int], N: int, samples: int, seed: int
) -> tuple[float, float]:
    """Sample mean and standard error of ``g_{i1 j1} g_{i2 j2} ...`` under Haar measure."""
    i, j = tuple(i), tuple(j)
    _check_N(N)
    if len(i) != len(j):
        raise ValueError("index sequences must have equal length")
    if len(i) % 2:
        raise ValueError("only even-degree monomials are supported (odd ones integrate to 0)")
    for seq in (i, j):
        if any(not 1 <= x <= N for x in seq):
            raise ValueError(f"indices must lie in 1..{N}: {seq}")
    if samples < 2:
        raise ValueError("need at least two samples")
    rows = np.array(i) - 1
    cols = np.array(j) - 1
    rng = _rng(seed)
    total = 0.0
    total_sq = 0.0
    done = 0
    while done < samples:
        count = min(BATCH, samples - done)
        g = sample_orthogonal_batch(N, count, rng)
        values = np.prod(g[:, rows, cols], axis=1)
        total += float(values.sum())
        total_sq += float((values * values).sum())
        done += count
    mean = total / samples
    var = max(total_sq / samples - mean * mean, 0.0) * samples / (samples - 1)
    return mean, sqrt(var / samples)
