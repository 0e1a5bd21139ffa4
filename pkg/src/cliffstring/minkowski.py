"""Spacetime-to-matrix dictionary: sigma sets, epsilon metric, det form.

A point x is packed into a 2x2 octonionic Hermitian matrix X = sigma_mu x^mu.
Two sigma sets are provided:

* dim 4: identity plus the three standard Pauli matrices, with the complex
  unit realized as a chosen imaginary octonion direction (default e_1).
* dim 10: sigma^0 = I, sigma^1 = diag(1, -1), and sigma^(k+2) =
  [[0, e_k*], [e_k, 0]] for k = 0..7, covering the full octonion algebra.

For Hermitian X = [[a, c], [c*, b]] the determinant form a b - c c* is real
and equals the Minkowski length x_mu x^mu of the packed point.

Spinor indices are raised and lowered with the antisymmetric epsilon,
eps_12 = eps^12 = 1, V^A = eps^{AB} V_B and V_B = V^A eps_{AB}; dotted
indices mirror the undotted convention.
"""

from __future__ import annotations

import numpy as np

from .octonion import Octonion, mul_arrays, conj_arrays, STRUCTURE
from .matrices import OctHermitian, NotHermitianError, hermiticity_residual

__all__ = [
    "EPS",
    "SigmaSet",
    "sigma_set",
    "sigma4_complex",
    "vector_to_matrix",
    "matrix_to_vector",
    "det2",
    "raise_spinor",
    "lower_spinor",
    "lower_spinor_indices",
    "eta4",
]

# One numeric matrix serves for eps_{AB} and eps^{AB} (and their dotted twins).
EPS = np.array([[0.0, 1.0], [-1.0, 0.0]])


def eta4() -> np.ndarray:
    return np.diag([1.0, -1.0, -1.0, -1.0])


def _unit(k):
    c = np.zeros(8)
    c[k] = 1.0
    return c


class SigmaSet:
    """Ordered sigma matrices as an (dim, 2, 2, 8) coefficient stack."""

    __slots__ = ("dim", "mats", "subspace")

    def __init__(self, dim: int, mats: np.ndarray, subspace: int):
        self.dim = dim
        self.mats = mats
        self.subspace = subspace

    def __iter__(self):
        return iter(self.mats)


def sigma_set(dim: int, subspace: int = 1) -> SigmaSet:
    if dim == 4:
        if not 1 <= subspace <= 7:
            raise ValueError("4D set needs an imaginary direction 1..7")
        ek = _unit(subspace)
        mats = np.zeros((4, 2, 2, 8))
        mats[0, 0, 0, 0] = mats[0, 1, 1, 0] = 1.0  # identity
        mats[1, 0, 1, 0] = mats[1, 1, 0, 0] = 1.0  # sigma_x
        mats[2, 0, 1] = -ek                        # sigma_y with i -> e_k
        mats[2, 1, 0] = ek
        mats[3, 0, 0, 0], mats[3, 1, 1, 0] = 1.0, -1.0  # sigma_z
        return SigmaSet(4, mats, subspace)
    if dim == 10:
        mats = np.zeros((10, 2, 2, 8))
        mats[0, 0, 0, 0] = mats[0, 1, 1, 0] = 1.0
        mats[1, 0, 0, 0], mats[1, 1, 1, 0] = 1.0, -1.0
        for k in range(8):
            mats[k + 2, 0, 1] = conj_arrays(_unit(k))
            mats[k + 2, 1, 0] = _unit(k)
        return SigmaSet(10, mats, 0)
    raise ValueError("dim must be 4 or 10")


def sigma4_complex(subspace: int = 1) -> np.ndarray:
    """The 4D set as plain complex (4, 2, 2) matrices."""
    mats = sigma_set(4, subspace).mats
    return mats[..., 0] + 1j * mats[..., subspace]


def vector_to_matrix(x, s: SigmaSet) -> OctHermitian:
    x = np.asarray(x, dtype=float)
    if x.shape != (s.dim,):
        raise ValueError(f"expected {s.dim} components, got {x.shape}")
    data = np.einsum("m,mabk->abk", x, s.mats)
    return OctHermitian(data, validate=False)


def matrix_to_vector(x_mat: OctHermitian, s: SigmaSet, tol: float = 1e-12) -> np.ndarray:
    """Inverse packing, x^mu = 1/2 Re tr(sigma^mu X); raises off Hermitian input."""
    if x_mat.n != 2:
        raise ValueError("expected a 2x2 matrix")
    if hermiticity_residual(x_mat.data) > tol:
        raise NotHermitianError("matrix_to_vector needs a Hermitian matrix")
    prod = np.einsum("mabi,bcj,ijk->mack", s.mats, x_mat.data, STRUCTURE)
    return 0.5 * (prod[:, 0, 0, 0] + prod[:, 1, 1, 0])


def det2(x_mat: OctHermitian, tol: float = 1e-12) -> float:
    """Determinant form a b - c c* of a Hermitian [[a, c], [c*, b]]; real."""
    if x_mat.n != 2:
        raise ValueError("det2 is for 2x2 matrices")
    if hermiticity_residual(x_mat.data) > tol:
        raise NotHermitianError("det2 needs a Hermitian matrix")
    a = x_mat.data[0, 0, 0]
    b = x_mat.data[1, 1, 0]
    c = x_mat.data[0, 1]
    return float(a * b - c @ c)


def raise_spinor(v):
    """V^A = eps^{AB} V_B on a 2-component object of any additive entries."""
    return (v[1], -v[0])


def lower_spinor(v):
    """V_B = V^A eps_{AB}."""
    return (-v[1], v[0])


def lower_spinor_indices(m: np.ndarray) -> np.ndarray:
    """Lower both spinor indices of a 2x2 stack: T_{AB} = eps^T T eps.

    Works on plain complex (2, 2) arrays and on octonionic (2, 2, 8) stacks.
    """
    if m.ndim == 2:
        return EPS.T @ m @ EPS
    return np.einsum("ca,cdX,db->abX", EPS, m, EPS)
