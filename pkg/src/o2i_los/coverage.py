"""Mean SNR, distance-conditioned LoS probability, and Nakagami-m coverage.

The channel power gain is Gamma(m, 1/m) distributed (unit mean): m = 1 is
Rayleigh, large m approaches Ricean.  Coverage mixes the LoS and NLoS
complementary CDFs with the LoS probability of the receiver ring.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .diffraction import fresnel_radius, wavelength
from .los import LOS_CLEARANCE_RATIO

_MC_CHUNK = 1 << 16


@dataclass(frozen=True)
class FadingModel:
    """Nakagami shapes and path-loss exponents for the two link states."""

    m_los: float = 10.0
    m_nlos: float = 1.0
    n_los: float = 1.2
    n_nlos: float = 2.9

    def __post_init__(self):
        if self.m_los < 0.5 or self.m_nlos < 0.5:
            raise ValueError("Nakagami shape must be at least 0.5")
        for n in (self.n_los, self.n_nlos):
            if not 0.5 < n < 6.0:
                raise ValueError("path-loss exponent must lie in (0.5, 6)")


@dataclass(frozen=True)
class LinkBudget:
    frequency: float  # Hz
    tx_power_dbm: float = 30.0
    noise_floor_dbm: float = -100.0
    snr_threshold_db: float = -5.0

    def __post_init__(self):
        if not self.frequency > 0:
            raise ValueError("frequency must be positive")
        if not self.noise_floor_dbm < self.tx_power_dbm:
            raise ValueError("noise floor must be below transmit power")


@dataclass(frozen=True)
class CoverageResult:
    p_cov: float
    p_los: float
    snr_los_db: float
    snr_nlos_db: float


def mean_snr(d: float, exponent: float, budget: LinkBudget) -> float:
    """Mean received SNR (linear) at distance d with the given loss exponent."""
    if not d > 0:
        raise ValueError("distance must be positive")
    lam = wavelength(budget.frequency)
    gain = lam**2 / (16.0 * math.pi**2 * d**exponent)
    return gain * 10.0 ** ((budget.tx_power_dbm - budget.noise_floor_dbm) / 10.0)


def p_los_at_distance(
    d_a: float,
    d_n: float,
    window_width: float,
    frequency: float,
    segment_width: float | None = None,
) -> float:
    """LoS fraction of receivers on a segment at depth d_n, zero aspect angle.

    The LoS span on the segment is the window aperture left after the edge
    clearance, projected from standoff d_a out to depth d_n.  The segment
    width defaults to d_n.
    """
    if not (d_a > 0 and d_n > 0 and window_width > 0):
        raise ValueError("d_a, d_n and window_width must be positive")
    width = d_n if segment_width is None else segment_width
    if not width > 0:
        raise ValueError("segment width must be positive")
    rd = fresnel_radius(d_a, d_n, wavelength(frequency))
    aperture = window_width - 2.0 * LOS_CLEARANCE_RATIO * rd
    if aperture <= 0.0:
        return 0.0
    return min((d_a + d_n) * aperture / (d_a * width), 1.0)


def _gamma_p_series(m: float, x: float) -> float:
    ap = m
    term = 1.0 / m
    total = term
    for _ in range(800):
        ap += 1.0
        term *= x / ap
        total += term
        if abs(term) < abs(total) * 1e-17:
            break
    exponent = -x + m * math.log(x) - math.lgamma(m)
    return total * math.exp(exponent) if exponent > -745.0 else 0.0


def _gamma_q_continued_fraction(m: float, x: float) -> float:
    tiny = 1e-300
    b = x + 1.0 - m
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 800):
        an = -i * (i - m)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-17:
            break
    exponent = -x + m * math.log(x) - math.lgamma(m)
    return h * math.exp(exponent) if exponent > -745.0 else 0.0


def reg_lower_gamma(m: float, x: float) -> float:
    """Regularized lower incomplete gamma P(m, x).

    Power series for x < m + 1, continued fraction beyond.
    """
    if not m > 0 or x < 0:
        raise ValueError("require m > 0 and x >= 0")
    if x == 0.0:
        return 0.0
    if x < m + 1.0:
        return _gamma_p_series(m, x)
    return 1.0 - _gamma_q_continued_fraction(m, x)


def reg_upper_gamma(m: float, x: float) -> float:
    """Regularized upper incomplete gamma Q(m, x) = 1 - P(m, x)."""
    if not m > 0 or x < 0:
        raise ValueError("require m > 0 and x >= 0")
    if x == 0.0:
        return 1.0
    if x < m + 1.0:
        return 1.0 - _gamma_p_series(m, x)
    return _gamma_q_continued_fraction(m, x)


def nakagami_ccdf(m: float, mean_snr: float, threshold: float) -> float:
    """P(instantaneous SNR > threshold) under Nakagami-m fading, linear units."""
    if m < 0.5:
        raise ValueError("Nakagami shape must be at least 0.5")
    if not mean_snr > 0:
        raise ValueError("mean SNR must be positive")
    if threshold < 0:
        raise ValueError("threshold must be nonnegative")
    return reg_upper_gamma(m, m * threshold / mean_snr)


def coverage_probability(
    d_a: float,
    d_n: float,
    window_width: float,
    fading: FadingModel,
    budget: LinkBudget,
) -> CoverageResult:
    """Coverage probability for receivers at depth d_n behind the window.

    Mixes the LoS and NLoS fading CCDFs at the ring distance d_a + d_n with
    the LoS probability of that ring.
    """
    p_los = p_los_at_distance(d_a, d_n, window_width, budget.frequency)
    d = d_a + d_n
    snr_los = mean_snr(d, fading.n_los, budget)
    snr_nlos = mean_snr(d, fading.n_nlos, budget)
    threshold = 10.0 ** (budget.snr_threshold_db / 10.0)
    p_cov = nakagami_ccdf(fading.m_los, snr_los, threshold) * p_los + nakagami_ccdf(
        fading.m_nlos, snr_nlos, threshold
    ) * (1.0 - p_los)
    return CoverageResult(
        p_cov=p_cov,
        p_los=p_los,
        snr_los_db=10.0 * math.log10(snr_los),
        snr_nlos_db=10.0 * math.log10(snr_nlos),
    )


def coverage_mc_oracle(
    d_a: float,
    d_n: float,
    window_width: float,
    fading: FadingModel,
    budget: LinkBudget,
    trials: int,
    seed: int,
) -> float:
    """Monte Carlo coverage estimate: state draw, Gamma(m, 1/m) gain, threshold.

    Trials are processed in fixed-size chunks whose generators (PCG64) are
    spawned from SeedSequence(seed), so the estimate depends only on the
    seed and trial count, not on how chunks are scheduled.
    """
    if trials < 10_000:
        raise ValueError("trials must be at least 10000")
    p_los = p_los_at_distance(d_a, d_n, window_width, budget.frequency)
    d = d_a + d_n
    snr_los = mean_snr(d, fading.n_los, budget)
    snr_nlos = mean_snr(d, fading.n_nlos, budget)
    threshold = 10.0 ** (budget.snr_threshold_db / 10.0)

    n_chunks = (trials + _MC_CHUNK - 1) // _MC_CHUNK
    children = np.random.SeedSequence(seed).spawn(n_chunks)
    covered = 0
    for i, child in enumerate(children):
        n = min(_MC_CHUNK, trials - i * _MC_CHUNK)
        rng = np.random.default_rng(child)
        los_state = rng.random(n) < p_los
        gain_los = rng.gamma(fading.m_los, 1.0 / fading.m_los, n)
        gain_nlos = rng.gamma(fading.m_nlos, 1.0 / fading.m_nlos, n)
        snr = np.where(los_state, gain_los * snr_los, gain_nlos * snr_nlos)
        covered += int(np.count_nonzero(snr > threshold))
    return covered / trials
