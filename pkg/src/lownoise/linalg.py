"""Dense complex linear algebra primitives shared by the rest of the package.

Everything here works on plain ``numpy`` arrays with complex entries.  The
multipartite convention throughout the package is that site 0 is the
slowest-varying (leftmost) tensor factor, matching ``numpy.kron`` ordering.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ContractViolationError, DimensionError

# Largest matrix dimension any tensor-product construction may produce.
DEFAULT_MAX_DIM = 4096

# Relative Frobenius tolerance for treating a matrix as Hermitian.
HERMITICITY_RTOL = 1e-10


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues (ascending) and orthonormal eigenvector columns of a Hermitian matrix."""

    values: np.ndarray
    vectors: np.ndarray


def _as_square(m, name: str = "matrix") -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"{name} must be a square matrix, got shape {a.shape}")
    return a


def hermiticity_defect(m) -> float:
    """Frobenius distance of ``m`` from its adjoint, relative to max(1, ||m||)."""
    a = np.asarray(m, dtype=complex)
    return float(np.linalg.norm(a - a.conj().T) / max(1.0, np.linalg.norm(a)))


def require_hermitian(m, rtol: float = HERMITICITY_RTOL, name: str = "matrix") -> np.ndarray:
    """Return ``m`` as a complex array, raising if it is not Hermitian within ``rtol``."""
    a = _as_square(m, name)
    if hermiticity_defect(a) > rtol:
        raise ContractViolationError(f"{name} is not Hermitian within rtol={rtol:g}")
    return a


def hermitize(m) -> np.ndarray:
    """The Hermitian part (m + m†)/2."""
    a = np.asarray(m, dtype=complex)
    return 0.5 * (a + a.conj().T)


def kron(a, b, max_dim: int = DEFAULT_MAX_DIM) -> np.ndarray:
    """Tensor (Kronecker) product with the left factor on the slow index.

    Raises
    ------
    DimensionError
        If the result would exceed ``max_dim`` rows or columns.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.ndim != 2 or b.ndim != 2:
        raise DimensionError("kron operands must be matrices")
    rows = a.shape[0] * b.shape[0]
    cols = a.shape[1] * b.shape[1]
    if rows > max_dim or cols > max_dim:
        raise DimensionError(
            f"kron result {rows}x{cols} exceeds the configured dimension cap {max_dim}"
        )
    return np.kron(a, b)


def partial_trace(rho, dims, keep) -> np.ndarray:
    """Trace out every tensor factor whose site index is not in ``keep``.

    Parameters
    ----------
    rho : array_like
        Square operator on the full tensor-product space.
    dims : sequence of int
        Dimension of each site; their product must equal the side of ``rho``.
    keep : iterable of int
        Nonempty set of site indices to retain.  The reduced operator acts on
        the kept sites in ascending site order.
    """
    r = _as_square(rho, "rho")
    dims = [int(d) for d in dims]
    if not dims or any(d < 1 for d in dims):
        raise DimensionError("dims must be a nonempty list of positive integers")
    total = int(np.prod(dims))
    if total != r.shape[0]:
        raise DimensionError(
            f"product of dims {dims} is {total}, but rho has dimension {r.shape[0]}"
        )
    n = len(dims)
    kept = sorted({int(k) for k in keep})
    if not kept:
        raise DimensionError("keep must be a nonempty set of site indices")
    if kept[0] < 0 or kept[-1] >= n:
        raise DimensionError(f"keep indices {kept} out of range for {n} sites")
    keep_set = set(kept)

    t = r.reshape(dims + dims)
    row = list(range(n))
    col = [n + i if i in keep_set else i for i in range(n)]
    out = kept + [n + i for i in kept]
    reduced = np.einsum(t, row + col, out)
    d_keep = int(np.prod([dims[i] for i in kept]))
    return reduced.reshape(d_keep, d_keep)


def hermitian_eig(h) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    Eigenvectors within degenerate subspaces are orthonormal but otherwise
    arbitrary; callers must not rely on the basis choice there.
    """
    a = require_hermitian(h, name="h")
    values, vectors = np.linalg.eigh(hermitize(a))
    return EigenDecomposition(values=values, vectors=vectors)


def project_to_simplex(v) -> np.ndarray:
    """Euclidean projection of a real vector onto the probability simplex."""
    x = np.asarray(v, dtype=float)
    u = np.sort(x)[::-1]
    css = np.cumsum(u)
    j = np.arange(1, x.size + 1)
    rho = np.nonzero(u + (1.0 - css) / j > 0)[0][-1]
    shift = (1.0 - css[rho]) / (rho + 1.0)
    return np.maximum(x + shift, 0.0)


def project_to_density(m) -> np.ndarray:
    """Nearest (Frobenius) Hermitian, positive-semidefinite, unit-trace matrix.

    Hermitizes, eigendecomposes, projects the spectrum onto the probability
    simplex, and reconstructs.  Always well-defined for square input.
    """
    a = _as_square(m, "m")
    h = hermitize(a)
    values, vectors = np.linalg.eigh(h)
    w = project_to_simplex(values)
    return hermitize((vectors * w) @ vectors.conj().T)
