"""Exact oscillatory integrals over the p-adic numbers and F_p((t)).

The heavy lifting lives in the compiled extension ``nonarch._core``; this
package re-exports its surface.  Amplitudes are exact sums of roots of unity
until the final magnitude, so zero detection is symbolic, not numeric.
"""

from nonarch._core import (
    Chart,
    Field,
    Phase,
    decay_csv,
    eval_integral,
    manifold_type,
    phase_from_json,
    phase_json,
    regular_degree,
    restriction_csv,
    run_suite,
    sp_number,
)

__all__ = [
    "Chart",
    "Field",
    "Phase",
    "decay_csv",
    "eval_integral",
    "manifold_type",
    "phase_from_json",
    "phase_json",
    "regular_degree",
    "restriction_csv",
    "run_suite",
    "sp_number",
]

__version__ = "0.1.0"
