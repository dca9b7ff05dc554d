"""The limiting ring: PBW elements, X basis, conversions and structure constants."""

from ..errors import InputError
from .coefthm import multiply_x_coefthm
from .hooks import char_basis, char_basis_eval, evaluate_hooks, hooks_expand
from .multipartition import EMPTY_MP, Multipartition, mp, multipartitions_of, multipartitions_up_to
from .pbw import GElement, pbw_normalize, t
from .tgen import (
    basic_hook,
    induced_limit,
    multiply_x_t,
    phi_p,
    t_from_phi,
    t_multi,
    t_to_x,
    x_to_t,
)


def multiply_x(ring, mu, nu, method: str = "t") -> dict:
    """Structure constants of X_mu X_nu as {Multipartition: Fraction}."""
    mu, nu = Multipartition(mu), Multipartition(nu)
    if method == "t":
        out = multiply_x_t(ring, mu, nu)
    elif method == "coefthm":
        out = multiply_x_coefthm(ring, mu, nu)
    else:
        raise InputError(f"unknown method {method!r}; use t or coefthm")
    bad = {k: v for k, v in out.items() if v < 0 or v.denominator != 1}
    if bad:
        raise ArithmeticError(f"non-integral or negative structure constants: {bad}")
    return out


__all__ = [
    "EMPTY_MP",
    "GElement",
    "Multipartition",
    "basic_hook",
    "char_basis",
    "char_basis_eval",
    "evaluate_hooks",
    "hooks_expand",
    "induced_limit",
    "mp",
    "multipartitions_of",
    "multipartitions_up_to",
    "multiply_x",
    "pbw_normalize",
    "phi_p",
    "t",
    "t_from_phi",
    "t_multi",
    "t_to_x",
    "x_to_t",
]
