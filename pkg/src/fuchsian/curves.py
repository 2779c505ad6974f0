"""Hyperelliptic curves y^2 = z^(2g+1) + sign with sign in {+1, -1}.

The branch points solve z^n = -sign (n = 2g+1 odd) and sit on the unit
circle at equally spaced angles; they are built directly from those
angles, never from a polynomial root finder.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass


@dataclass(frozen=True)
class HyperellipticCurve:
    genus: int
    sign: int

    def __post_init__(self) -> None:
        if self.genus < 1:
            raise ValueError("genus must be at least 1")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @property
    def degree(self) -> int:
        return 2 * self.genus + 1


def genus_from_degree(n: int) -> int:
    """Genus of a degree-n curve: floor((n - 1)/2); needs n >= 3."""
    if n < 3:
        raise ValueError("degree must be at least 3")
    return (n - 1) // 2


def roots(curve: HyperellipticCurve) -> list[complex]:
    """The n solutions of z^n = -sign, ordered by angle in (0, 2*pi].

    sign -1 gives the n-th roots of unity (the root 1 comes last, at
    angle 2*pi); sign +1 gives e^(i pi (2k+1)/n), so the list starts at
    e^(i pi/n).
    """
    n = curve.degree
    if curve.sign == -1:
        angles = [2.0 * math.pi * k / n for k in range(n)]
    else:
        angles = [math.pi * (2 * k + 1) / n for k in range(n)]
    keyed = []
    for theta in angles:
        t = math.fmod(theta, 2.0 * math.pi)
        if t <= 0.0:
            t += 2.0 * math.pi
        keyed.append((t, cmath.exp(1j * t)))
    keyed.sort(key=lambda pair: pair[0])
    return [z for _, z in keyed]


def fde_coefficient(curve: HyperellipticCurve, z: complex) -> complex:
    """Coefficient (3/16)[(f'/f)^2 - ((2g+2)/(2g+1)) f''/f] of the
    degree-2 term in the uniformizing differential equation, where
    f(z) = z^n + sign.
    """
    n = curve.degree
    z = complex(z)
    f = z**n + curve.sign
    if f == 0:
        raise ValueError("z is a curve root: coefficient has a pole there")
    fp = n * z ** (n - 1)
    fpp = n * (n - 1) * z ** (n - 2)
    ratio = (2.0 * curve.genus + 2.0) / (2.0 * curve.genus + 1.0)
    return (3.0 / 16.0) * ((fp / f) ** 2 - ratio * (fpp / f))
