"""Exact computations for the twisted Heisenberg-Virasoro algebra at level zero."""

import json

from ._hvff import (  # noqa: F401
    AlgebraMismatch,
    PreconditionViolated,
    Scalar,
    UnknownCommand,
    decomp_check,
    delta,
    fusion_dim,
    irr_char,
    lambda_neg,
    phi_omega,
    phi_omega_closed,
    run_suite_json,
    schur_singular,
    suite_names,
    uniqueness_weight,
    verma_char,
    w22_singular,
)


def run_suite(command, *, p=None, q=None, N=None, numeric=False, seed=1,
              p_range=(-3, 3), q_range=(-3, 3), **bindings):
    """Run a verification suite; keyword bindings are cL, cLI, h, hI, hp, F, a, b."""
    report = run_suite_json(command, p, q, N, {k: str(v) for k, v in bindings.items()},
                            numeric, seed, tuple(p_range), tuple(q_range))
    return json.loads(report)
