"""Transfer functions of a pinned beam with a spring-mass-damper attachment."""
from ._beamtf import (
    BeamError,
    BeamParams,
    DerivedParams,
    ModalPeak,
    ResidualReport,
    TransferSample,
    derive_params,
    eb_expm,
    eb_gamma,
    expm_series_oracle,
    fd_bvp_oracle,
    find_peaks,
    h2_consistency,
    reference_params,
    residual_check,
    sweep,
    tb_coeffs,
    tb_expm,
    transfer,
    transfer_at_hz,
    validate,
)

__all__ = [
    "BeamError",
    "BeamParams",
    "DerivedParams",
    "ModalPeak",
    "ResidualReport",
    "TransferSample",
    "derive_params",
    "eb_expm",
    "eb_gamma",
    "expm_series_oracle",
    "fd_bvp_oracle",
    "find_peaks",
    "h2_consistency",
    "reference_params",
    "residual_check",
    "sweep",
    "tb_coeffs",
    "tb_expm",
    "transfer",
    "transfer_at_hz",
    "validate",
]
