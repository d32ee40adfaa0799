"""Exact distribution algebra for counts of simultaneous transmissions.

Everything here works on finitely truncated probability mass functions over
the nonnegative integers.  Truncated-away mass is carried explicitly as a
tail bound so that distances between truncated laws can be reported together
with the uncertainty the truncation introduces.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

__all__ = [
    "Pmf",
    "MixtureLimit",
    "Distance",
    "poisson_binomial",
    "poisson_pmf",
    "convolve",
    "mixture_pmf",
    "variational_distance",
]

# Mass unaccounted for by (sum + tail) must stay within this of 1.
_NORMALIZATION_TOL = 1e-9

DEFAULT_TAIL_THRESHOLD = 1e-12


@dataclass(frozen=True)
class Pmf:
    """Probability mass function on 0, 1, ..., len(mass)-1 plus a tail bound.

    ``tail`` bounds the mass beyond the stored support.  The stored array is
    copied and frozen at construction; instances are safe to share.
    """

    mass: np.ndarray
    tail: float = 0.0

    def __post_init__(self) -> None:
        arr = np.array(self.mass, dtype=float, copy=True)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("mass must be a nonempty 1-D array")
        if np.any(arr < 0.0) or not np.all(np.isfinite(arr)):
            raise ValueError("mass entries must be finite and nonnegative")
        tail = float(self.tail)
        if tail < 0.0:
            raise ValueError(f"tail bound must be nonnegative, got {tail}")
        total = float(arr.sum()) + tail
        if abs(total - 1.0) > _NORMALIZATION_TOL:
            raise ValueError(f"mass + tail = {total!r}, not within {_NORMALIZATION_TOL} of 1")
        arr.setflags(write=False)
        object.__setattr__(self, "mass", arr)
        object.__setattr__(self, "tail", tail)

    def __len__(self) -> int:
        return self.mass.size

    def __getitem__(self, k: int) -> float:
        if k < 0:
            raise IndexError("pmf is supported on nonnegative integers")
        return float(self.mass[k]) if k < self.mass.size else 0.0

    def mean(self) -> float:
        return float(np.arange(self.mass.size) @ self.mass)

    def variance(self) -> float:
        ks = np.arange(self.mass.size)
        m = self.mean()
        return float(((ks - m) ** 2) @ self.mass)

    @classmethod
    def point_mass(cls, k: int = 0) -> "Pmf":
        mass = np.zeros(k + 1)
        mass[k] = 1.0
        return cls(mass)


@dataclass(frozen=True)
class MixtureLimit:
    """Limit law for the total arrival count: Poisson plus independent Bernoullis.

    ``poisson_mean`` is the Poisson component's mean; ``bernoullis`` are the
    success probabilities of the finitely many retained Bernoulli components.
    """

    poisson_mean: float
    bernoullis: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        lam = float(self.poisson_mean)
        if not lam >= 0.0:
            raise ValueError(f"poisson mean must be nonnegative, got {lam!r}")
        bern = tuple(float(p) for p in self.bernoullis)
        if any(not 0.0 <= p <= 1.0 for p in bern):
            raise ValueError("bernoulli parameters must lie in [0, 1]")
        object.__setattr__(self, "poisson_mean", lam)
        object.__setattr__(self, "bernoullis", bern)

    @property
    def bernoulli_count(self) -> int:
        return len(self.bernoullis)


def poisson_binomial(probs: Iterable[float]) -> Pmf:
    """Exact law of a sum of independent Bernoulli variables.

    Iterative convolution over the success probabilities: O(n^2) work, exact
    up to floating-point rounding, no truncation (tail bound 0).  The
    quadratic cost is entirely acceptable up to n of a few tens of thousands
    and avoids the cancellation pitfalls of FFT-based methods.
    """
    p = np.asarray(list(probs), dtype=float)
    if p.size and (np.any(p < 0.0) or np.any(p > 1.0) or not np.all(np.isfinite(p))):
        raise ValueError("success probabilities must lie in [0, 1]")
    mass = np.zeros(p.size + 1)
    mass[0] = 1.0
    for pk in p:
        mass[1:] = mass[1:] * (1.0 - pk) + mass[:-1] * pk
        mass[0] *= 1.0 - pk
    return Pmf(mass, tail=0.0)


def poisson_pmf(mean: float, tail_threshold: float = DEFAULT_TAIL_THRESHOLD) -> Pmf:
    """Poisson law truncated where the remaining tail drops below the threshold.

    Uses the stable multiplicative recurrence m_{k} = m_{k-1} * mean / k
    starting from exp(-mean); the leftover mass is recorded as the tail bound.
    """
    lam = float(mean)
    if not lam >= 0.0:
        raise ValueError(f"mean must be nonnegative, got {lam!r}")
    if not 0.0 < tail_threshold < 1.0:
        raise ValueError(f"tail threshold must be in (0, 1), got {tail_threshold!r}")
    if lam == 0.0:
        return Pmf.point_mass(0)
    terms = [np.exp(-lam)]
    cum = terms[0]
    k = 0
    while 1.0 - cum >= tail_threshold and terms[-1] > 0.0:
        k += 1
        terms.append(terms[-1] * lam / k)
        cum += terms[-1]
    mass = np.array(terms)
    return Pmf(mass, tail=max(0.0, 1.0 - float(mass.sum())))


def convolve(f: Pmf, g: Pmf) -> Pmf:
    """Law of the sum of two independent counts.

    Tail bounds add: the mass missing from the result is at most the sum of
    the operands' missing mass.
    """
    return Pmf(np.convolve(f.mass, g.mass), tail=min(1.0, f.tail + g.tail))


def mixture_pmf(limit: MixtureLimit, tail_threshold: float = DEFAULT_TAIL_THRESHOLD) -> Pmf:
    """Pmf of a Poisson-plus-Bernoullis mixture limit."""
    return convolve(poisson_pmf(limit.poisson_mean, tail_threshold),
                    poisson_binomial(limit.bernoullis))


class Distance(NamedTuple):
    """A variational distance together with its truncation uncertainty."""

    value: float
    uncertainty: float


def variational_distance(f: Pmf, g: Pmf) -> Distance:
    """Sum of absolute pmf differences over the union of supports.

    This is twice the conventional total-variation metric, so values lie in
    [0, 2].  Mass hidden beyond either truncation can shift the true distance
    by at most the reported uncertainty (the summed tail bounds).
    """
    size = max(len(f), len(g))
    fm = np.zeros(size)
    fm[: len(f)] = f.mass
    gm = np.zeros(size)
    gm[: len(g)] = g.mass
    return Distance(float(np.abs(fm - gm).sum()), f.tail + g.tail)
