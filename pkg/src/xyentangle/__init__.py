"""Thermal entanglement of two qubits coupled by an anisotropic XY exchange
with cross (sigma_x sigma_y) terms in an arbitrary magnetic field."""
from .entangle import (ConcurrenceResult, Path, concurrence, concurrence_analytic_bz,
                       concurrence_numeric, concurrence_t0_closed, wootters_roots)
from .errors import (ContractViolation, DomainError, InvalidInputError, InvalidStateError,
                     NotPSDError, NumericalFailure, XYEntangleError)
from .explore import (SweepGrid, SweepRow, ThresholdResult, detect_jump_t0, figure_preset,
                      jump_locus_t0, run_sweep, threshold_temperature)
from .kernels import BACKEND
from .matcore import SpectralDecomp, eig_hermitian, mat_exp_hermitian, mat_sqrt_psd
from .spinmodel import ModelParams, SpectralQuantities, hamiltonian, spectral_quantities
from .thermal import ThermalState, gibbs_state, ground_state, thermal_state

__version__ = "0.1.0"
