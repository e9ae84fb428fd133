"""Norm hierarchies, hard instances, and structured simulations for Hermitian
Hamiltonians: python bindings over the C++ core."""

from fractions import Fraction

from ._core import *  # noqa: F401,F403
from ._core import promise_probability as _promise_probability


def promise_probability_fraction(M, B):
    """Exact promise-set probability 2*C(M,(M+B)/2)/2**M as a Fraction."""
    p = _promise_probability(M, B)
    return Fraction(int(p.numerator), int(p.denominator))
