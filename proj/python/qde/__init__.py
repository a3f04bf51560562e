"""Quantum dynamical entropy of unitaries.

Entropy rates of the outcome Markov chain generated by a unitary interleaved
with a rank-1 PVM/POVM measurement, chaoticity classification, and
Haar-ensemble statistics. The heavy lifting lives in the C++ extension.
"""

from ._qde import (
    HaarSampler,
    block_entropies,
    classify,
    classify_catalogue,
    dim2_spectrum,
    dynamical_entropy,
    empirical_entropy_rate,
    entropy_rate,
    gate,
    hadamard_defect,
    hdyn_closed_form_d2,
    hypocycloid_point,
    in_t3,
    m_c3_quadrature,
    maximizing_basis_d2,
    mc_chaotic_volume,
    mc_mean_fixed_pvm,
    mc_mean_hdyn_d2,
    mc_mean_maxent,
    measurement_entropy,
    pvm_dynamical_entropy,
    pvm_from_unitary,
    shannon_eta,
    sic_povm,
    state_entropy,
    t3_density_normalization,
    trace_density_d3,
    transition_matrix,
    weyl_mean_hdyn_d2,
    weyl_volume_d2,
)

__all__ = [
    "HaarSampler",
    "block_entropies",
    "classify",
    "classify_catalogue",
    "dim2_spectrum",
    "dynamical_entropy",
    "empirical_entropy_rate",
    "entropy_rate",
    "gate",
    "hadamard_defect",
    "hdyn_closed_form_d2",
    "hypocycloid_point",
    "in_t3",
    "m_c3_quadrature",
    "maximizing_basis_d2",
    "mc_chaotic_volume",
    "mc_mean_fixed_pvm",
    "mc_mean_hdyn_d2",
    "mc_mean_maxent",
    "measurement_entropy",
    "pvm_dynamical_entropy",
    "pvm_from_unitary",
    "shannon_eta",
    "sic_povm",
    "state_entropy",
    "t3_density_normalization",
    "trace_density_d3",
    "transition_matrix",
    "weyl_mean_hdyn_d2",
    "weyl_volume_d2",
]

__version__ = "0.1.0"
