from fractions import Fraction

import mpmath as mp
import pytest

from bamehta.errors import GammaPole
from bamehta.gamma import NotExact, gamma, gamma_exact, loggamma, pow2_exact, rgamma, rgamma_exact

POINTS = [0.5, 1.0, 3.7, 17.25, -0.5, -3.3, 0.1 + 2j, -4.5 + 0.7j, 2.3 - 9.1j, 60.2, 1e-3 + 0j, -170.4]


@pytest.mark.parametrize("z", POINTS)
def test_gamma_vs_mpmath(z):
    ref = complex(mp.gamma(mp.mpc(z)))
    assert abs(gamma(z) - ref) <= 1e-13 * abs(ref)


@pytest.mark.parametrize("z", [0.5, 7.3 + 1j, 120.0, 3 - 40j])
def test_loggamma_vs_mpmath(z):
    ref = complex(mp.loggamma(mp.mpc(z)))
    assert abs(loggamma(z) - ref) <= 1e-13 * max(1.0, abs(ref))


@pytest.mark.parametrize("n", [0, -1, -7])
def test_poles(n):
    with pytest.raises(GammaPole):
        gamma(n)
    assert rgamma(n) == 0


def test_exact_values():
    assert gamma_exact(5).as_fraction() == 24
    half = gamma_exact(Fraction(1, 2))
    assert abs(complex(half) - mp.sqrt(mp.pi)) < 1e-15
    assert abs(complex(gamma_exact(Fraction(-3, 2))) - complex(mp.gamma(-1.5))) < 1e-14
    assert rgamma_exact(-2).as_fraction() == 0
    assert (pow2_exact(Fraction(1, 2)) ** 2).as_fraction() == 2
    with pytest.raises(NotExact):
        gamma_exact(Fraction(1, 3))
    with pytest.raises(GammaPole):
        gamma_exact(0)
