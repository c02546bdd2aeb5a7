"""Fourier correspondence between polynomial waves and concentrated distributions.

``x^n e^{iax}  <->  i^n sqrt(2 pi) delta^(n)(x - a)``, extended linearly.
"""

from __future__ import annotations

from .distributions import ConcentratedDist
from .scalars import I, SQRT2PI
from .waves import PolyWave

_I_POWERS = (1, I, -1, -I)


def _ipow(n: int):
    return _I_POWERS[n % 4]


def fourier(f: PolyWave) -> ConcentratedDist:
    return ConcentratedDist(
        (a, [c * _ipow(n) * SQRT2PI for n, c in enumerate(p)]) for a, p in f.components
    )


def inverse_fourier(phi: ConcentratedDist) -> PolyWave:
    inv = SQRT2PI.inverse()
    return PolyWave(
        (a, [c * _ipow(-n) * inv for n, c in enumerate(cs)]) for a, cs in phi.components
    )
