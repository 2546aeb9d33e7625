"""Chain families and validated model parameters shared by every solver.

The isotropic antiferromagnet (XXX) is represented as the eta = 1 endpoint of
the critical XXZ family, with Delta = +1 by convention, so that formulas which
stay finite at eta = 1 need no duplication.  The ferromagnetic endpoint
eta = 0 is rejected.  Gapped anisotropy |Delta| > 1 and finite temperature are
out of scope.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from enum import Enum


class Family(str, Enum):
    XXX = "xxx"
    XXZ = "xxz"


@dataclass(frozen=True)
class ChainModel:
    """Immutable (family, anisotropy, magnetic field) triple.

    `eta` parametrizes the anisotropy through Delta = cos(pi * eta) for the
    XXZ family; `h` is the magnetic field in the energy units of the
    Hamiltonian.  Instances are safe to share between threads.
    """

    family: Family
    eta: float
    h: float = 0.0

    @property
    def delta(self) -> float:
        """Anisotropy Delta; +1 for XXX by convention, cos(pi*eta) for XXZ."""
        if self.family is Family.XXX:
            return 1.0
        return math.cos(math.pi * self.eta)

    @property
    def critical_field(self) -> float:
        """Saturation field h_c beyond which the ground state polarizes."""
        if self.family is Family.XXX:
            return 4.0
        return 2.0 * (1.0 - math.cos(math.pi * self.eta))


def _parse_family(family) -> Family:
    if isinstance(family, Family):
        return family
    if isinstance(family, str):
        try:
            return Family(family.lower())
        except ValueError:
            pass
    raise ValueError(f"unknown chain family {family!r}")


def make_model(family, eta: float, h: float = 0.0, allow_saturated: bool = False) -> ChainModel:
    """Validate and build a ChainModel.

    XXX demands eta == 1; XXZ demands 0 < eta < 1 strictly (eta = 0 is the
    ferromagnetic endpoint and is rejected).  Fields above the saturation
    value are rejected unless `allow_saturated` is set, in which case the
    caller explicitly opts into the fully polarized branch.
    """
    fam = _parse_family(family)
    eta = float(eta)
    h = float(h)
    if fam is Family.XXX:
        if eta != 1.0:
            raise ValueError("XXX is the eta = 1 endpoint; got eta = %r" % eta)
    else:
        if not 0.0 < eta < 1.0:
            raise ValueError("XXZ requires 0 < eta < 1; got eta = %r" % eta)
    if h < 0.0:
        raise ValueError("magnetic field must be >= 0")
    model = ChainModel(family=fam, eta=eta, h=h)
    if not allow_saturated and h > model.critical_field:
        raise ValueError(
            f"h = {h} exceeds the saturation field h_c = {model.critical_field}; "
            "pass allow_saturated=True to opt into the polarized branch"
        )
    return model


def check_separation(n) -> int:
    """Validate a lattice separation |i - j| (positive integer)."""
    if not isinstance(n, numbers.Integral):
        raise ValueError(f"separation must be an integer, got {n!r}")
    n = int(n)
    if n < 1:
        raise ValueError(f"separation must be >= 1, got {n}")
    return n
