"""Numerical laboratory for Hilbert transforms along variable flat curves.

The package discretizes the modulated singular integral operators that arise
when the plane curve (t, P(x1) * gamma(t)) is flat at the origin, and checks
every finite-scale inequality that the underlying theory predicts: curvature
and doubling conditions on gamma, smallness of the polynomial exceptional
sets, oscillatory-integral envelopes, Schur-row kernel decay, and uniformity
of the operator norms over polynomial coefficients.
"""

from flatcurve.curves import (
    CurveSpec,
    ConditionReport,
    CurveRangeError,
    eval_curve,
    check_theorem_conditions,
    check_literature_conditions,
    check_doubling,
    full_report,
    make_grid,
    corpus,
    get_curve,
)
from flatcurve.intervals import IntervalUnion
from flatcurve.polyanalysis import (
    Polynomial,
    RootData,
    rescale,
    compute_Ek,
    sum_Ek_alpha,
    verify_gradient_bound,
    tv_sign_change_check,
)
from flatcurve.oscquad import (
    PhaseSpec,
    QuadResult,
    solve_omega,
    upsilon,
    oscillatory_integral,
    compute_Jr,
    verify_prop41,
)
from flatcurve.kernels import (
    KernelSample,
    DecayFit,
    compute_kernel,
    schur_row_integral,
    schur_column_integral,
    fit_decay,
)
from flatcurve.opnorm import (
    SuConfig,
    NormEstimate,
    discretize_Su,
    decompose_Su,
    estimate_norm,
    sweep_uniformity,
    apply_H2d,
    plancherel_crosscheck,
)

__version__ = "0.1.0"
