"""Exact ADO knot invariants, colored Jones polynomials, and q-holonomic
recursion tools (thin wrapper over the C++ core)."""

import json as _json

try:  # installed layout: extension lives inside the package
    from . import _adoq as _core
except ImportError:  # build-tree layout: extension on PYTHONPATH
    import _adoq as _core

ado_hat_latex = _core.ado_hat_latex
colored_jones = _core.colored_jones

__all__ = [
    "ado_hat",
    "ado_hat_latex",
    "colored_jones",
    "verify_recursion",
    "residue_check",
    "kashaev_check",
    "guess",
    "tangle_info",
]


def ado_hat(knot="3_1", r=2, tangle_text=""):
    """Hat-normalized ADO invariant at zeta_2r as a dict
    {"vars": [...], "terms": [{"exp2": [...], "coeff": ...}]}."""
    return _json.loads(_core.ado_hat(knot, r, tangle_text))


def verify_recursion(knot, rmin=2, rmax=11, Nmin=2, Nmax=15):
    """Certificates for the Jones-side and ADO-side recursions."""
    return _json.loads(_core.verify_recursion(knot, rmin, rmax, Nmin, Nmax))


def residue_check(knot, r, N):
    return _json.loads(_core.residue_check(knot, r, N))


def kashaev_check(knot, r):
    return _json.loads(_core.kashaev_check(knot, r))


def guess(knot="3_1", y_order=2, x_deg=11, q_deg=20,
          train=range(2, 10), test=range(10, 13)):
    """Search for an annihilating operator of the ADO family."""
    return _json.loads(
        _core.guess(knot, y_order, x_deg, q_deg, list(train), list(test)))


def tangle_info(text):
    """Validate a tangle program and return its statistics."""
    return _json.loads(_core.tangle_info(text))
