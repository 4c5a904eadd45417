"""Low-noise channels represented as truncated operator polynomials in eps.

A channel acts as ``rho -> sum_a B_a rho B_a† + eps * sum_b C_b rho C_b†``
where every Kraus factor is a matrix polynomial in the noise strength eps.
The near-identity family B_a starts at ``kappa_a * I`` (with the kappa
weights squared summing to one) and the noise family C_b carries an explicit
factor of eps, so the channel reduces to the identity at eps = 0.

The module provides evaluation, validation against the defining conditions,
ancilla and many-body tensor extensions, a small catalog of standard
channels, and a JSON interchange format (see `load_channel`).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, replace
from functools import reduce

import numpy as np

from .errors import (
    ChannelValidationError,
    ContractViolationError,
    DimensionError,
    DomainError,
    SpecFileError,
    UsageError,
)
from .linalg import DEFAULT_MAX_DIM, hermitize, kron

# Engineering cap on the number of Kraus families per channel.
MAX_FAMILIES = 64

DEFAULT_TRUNCATION_ORDER = 6

# eps values above this are outside the low-noise regime and refused by validate().
VALIDATION_EPS_MAX = 0.1
DEFAULT_VALIDATION_GRID = (1e-3, 1e-2)

KAPPA_NORM_TOL = 1e-10
IDENTITY_TOL = 1e-10

CATALOG_NAMES = (
    "identity",
    "depolarizing",
    "amplitude_damping",
    "phase_flip",
    "random_lownoise",
)

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)


@dataclass(frozen=True)
class OperatorSeries:
    """Matrix-valued polynomial sum_k coefficients[k] * eps**k."""

    coefficients: tuple[np.ndarray, ...]

    def __post_init__(self):
        coeffs = tuple(np.asarray(c, dtype=complex) for c in self.coefficients)
        if not coeffs:
            raise DimensionError("OperatorSeries needs at least the order-0 coefficient")
        shape = coeffs[0].shape
        if len(shape) != 2 or shape[0] != shape[1]:
            raise DimensionError(f"series coefficients must be square, got shape {shape}")
        for k, c in enumerate(coeffs):
            if c.shape != shape:
                raise DimensionError(
                    f"coefficient {k} has shape {c.shape}, expected {shape}"
                )
            if not np.isfinite(c).all():
                raise ContractViolationError(f"coefficient {k} has non-finite entries")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def dim(self) -> int:
        return self.coefficients[0].shape[0]

    @property
    def truncation_order(self) -> int:
        return len(self.coefficients) - 1


@dataclass(frozen=True)
class LowNoiseChannel:
    """Validated collection of near-identity (B) and noise (C) Kraus series.

    ``kappas[a]`` is the identity weight of ``b_series[a]`` at eps = 0.
    ``truncation_defect`` is only set by `extend_nbody` and records the
    size of the dropped multi-defect terms (coefficient of eps**2 in the
    completeness residual).
    """

    dim: int
    b_series: tuple[OperatorSeries, ...]
    c_series: tuple[OperatorSeries, ...]
    kappas: tuple[complex, ...]
    label: str = ""
    truncation_defect: float | None = None

    def __post_init__(self):
        b = tuple(self.b_series)
        c = tuple(self.c_series)
        kappas = tuple(complex(k) for k in self.kappas)
        if not b:
            raise DimensionError("a channel needs at least one near-identity series")
        if len(kappas) != len(b):
            raise DimensionError(
                f"{len(kappas)} kappa weights for {len(b)} near-identity series"
            )
        if len(b) > MAX_FAMILIES or len(c) > MAX_FAMILIES:
            raise DimensionError(
                f"channel exceeds the {MAX_FAMILIES}-family cap "
                f"({len(b)} near-identity, {len(c)} noise series)"
            )
        for s in (*b, *c):
            if s.dim != self.dim:
                raise DimensionError(
                    f"series dimension {s.dim} does not match channel dimension {self.dim}"
                )
        object.__setattr__(self, "b_series", b)
        object.__setattr__(self, "c_series", c)
        object.__setattr__(self, "kappas", kappas)

    @property
    def truncation_order(self) -> int:
        return max(s.truncation_order for s in (*self.b_series, *self.c_series))


@dataclass(frozen=True)
class ValidationReport:
    """Defects of a channel against its defining conditions.

    ``passed`` is true iff the kappa-norm and identity defects are below
    1e-10 and every completeness residual is below 10 * eps**(K+1) + 1e-12
    for the channel truncation order K.
    """

    kappa_norm_defect: float
    identity_defects: tuple[float, ...]
    completeness_residuals: tuple[tuple[float, float], ...]
    passed: bool


def evaluate_kraus(series: OperatorSeries, eps: float) -> np.ndarray:
    """Horner evaluation of the operator polynomial at a noise strength eps >= 0."""
    if eps < 0:
        raise DomainError(f"eps must be non-negative, got {eps}")
    coeffs = series.coefficients
    out = np.array(coeffs[-1], copy=True)
    for c in coeffs[-2::-1]:
        out *= eps
        out += c
    return out


def series_derivative(series: OperatorSeries) -> OperatorSeries:
    """Coefficient-wise derivative with respect to eps."""
    coeffs = series.coefficients
    if len(coeffs) == 1:
        return OperatorSeries((np.zeros_like(coeffs[0]),))
    return OperatorSeries(tuple(k * coeffs[k] for k in range(1, len(coeffs))))


def series_kron(a: OperatorSeries, b: OperatorSeries, max_dim: int = DEFAULT_MAX_DIM) -> OperatorSeries:
    """Tensor product of two operator polynomials (full product order, no truncation)."""
    d = a.dim * b.dim
    out = [np.zeros((d, d), dtype=complex) for _ in range(a.truncation_order + b.truncation_order + 1)]
    for i, ca in enumerate(a.coefficients):
        for j, cb in enumerate(b.coefficients):
            out[i + j] += kron(ca, cb, max_dim=max_dim)
    return OperatorSeries(tuple(out))


def _check_state(ch: LowNoiseChannel, rho) -> np.ndarray:
    r = np.asarray(rho, dtype=complex)
    if r.shape != (ch.dim, ch.dim):
        raise DimensionError(
            f"state has shape {r.shape}, channel dimension is {ch.dim}"
        )
    return r


def apply_with_defect(ch: LowNoiseChannel, rho, eps: float) -> tuple[np.ndarray, float]:
    """Channel output and the pre-renormalization trace defect |Tr - 1|.

    The raw Kraus sum is hermitized and renormalized to unit trace; the
    defect (caused only by series truncation) is returned alongside.
    """
    r = _check_state(ch, rho)
    if eps < 0:
        raise DomainError(f"eps must be non-negative, got {eps}")
    out = np.zeros_like(r)
    for s in ch.b_series:
        b = evaluate_kraus(s, eps)
        out += b @ r @ b.conj().T
    if ch.c_series:
        acc = np.zeros_like(r)
        for s in ch.c_series:
            c = evaluate_kraus(s, eps)
            acc += c @ r @ c.conj().T
        out += eps * acc
    out = hermitize(out)
    tr = float(np.real(np.trace(out)))
    if tr <= 0:
        raise ContractViolationError("channel output has non-positive trace")
    return out / tr, abs(tr - 1.0)


def apply(ch: LowNoiseChannel, rho, eps: float) -> np.ndarray:
    """Channel output state (hermitized, renormalized to unit trace)."""
    return apply_with_defect(ch, rho, eps)[0]


def derivative_output(ch: LowNoiseChannel, rho, eps: float) -> np.ndarray:
    """Exact eps-derivative of the truncated-series channel output.

    Product rule on the polynomial Kraus factors; the result is hermitized.
    Note this differentiates the raw Kraus sum, before renormalization.
    """
    r = _check_state(ch, rho)
    if eps < 0:
        raise DomainError(f"eps must be non-negative, got {eps}")
    out = np.zeros_like(r)
    for s in ch.b_series:
        b = evaluate_kraus(s, eps)
        db = evaluate_kraus(series_derivative(s), eps)
        out += db @ r @ b.conj().T + b @ r @ db.conj().T
    for s in ch.c_series:
        c = evaluate_kraus(s, eps)
        dc = evaluate_kraus(series_derivative(s), eps)
        out += c @ r @ c.conj().T
        out += eps * (dc @ r @ c.conj().T + c @ r @ dc.conj().T)
    return hermitize(out)


def completeness_residual(ch: LowNoiseChannel, eps: float) -> float:
    """Frobenius norm of sum_a B†B + eps * sum_b C†C - I at the given eps."""
    acc = -np.eye(ch.dim, dtype=complex)
    for s in ch.b_series:
        b = evaluate_kraus(s, eps)
        acc += b.conj().T @ b
    for s in ch.c_series:
        c = evaluate_kraus(s, eps)
        acc += eps * (c.conj().T @ c)
    return float(np.linalg.norm(acc))


def validate(ch: LowNoiseChannel, eps_grid=DEFAULT_VALIDATION_GRID) -> ValidationReport:
    """Check the defining conditions and report the defects.

    Reports |sum |kappa|^2 - 1|, the per-family ||B(0) - kappa*I|| defects,
    and the completeness residual on the eps grid.  Never raises on a bad
    channel; failures are carried in the report.
    """
    grid = [float(e) for e in eps_grid]
    if not grid:
        raise DomainError("eps_grid must be nonempty")
    if any(e < 0 or e > VALIDATION_EPS_MAX for e in grid):
        raise DomainError(f"eps_grid entries must lie in [0, {VALIDATION_EPS_MAX}]")

    kappa_defect = abs(sum(abs(k) ** 2 for k in ch.kappas) - 1.0)
    eye = np.eye(ch.dim, dtype=complex)
    identity_defects = tuple(
        float(np.linalg.norm(s.coefficients[0] - k * eye))
        for s, k in zip(ch.b_series, ch.kappas)
    )
    residuals = tuple((e, completeness_residual(ch, e)) for e in grid)

    order = ch.truncation_order
    passed = (
        kappa_defect <= KAPPA_NORM_TOL
        and all(d <= IDENTITY_TOL for d in identity_defects)
        and all(r <= 10.0 * e ** (order + 1) + 1e-12 for e, r in residuals)
    )
    return ValidationReport(
        kappa_norm_defect=float(kappa_defect),
        identity_defects=identity_defects,
        completeness_residuals=residuals,
        passed=passed,
    )


def extend_ancilla(ch: LowNoiseChannel, max_dim: int = DEFAULT_MAX_DIM) -> LowNoiseChannel:
    """Extend to act trivially on an ancilla of the same dimension.

    Every Kraus coefficient X becomes X (x) I, so the result lives on
    dimension dim**2.  Kappa weights are unchanged.
    """
    eye = np.eye(ch.dim, dtype=complex)

    def ext(s: OperatorSeries) -> OperatorSeries:
        return OperatorSeries(tuple(kron(c, eye, max_dim=max_dim) for c in s.coefficients))

    return LowNoiseChannel(
        dim=ch.dim ** 2,
        b_series=tuple(ext(s) for s in ch.b_series),
        c_series=tuple(ext(s) for s in ch.c_series),
        kappas=ch.kappas,
        label=f"{ch.label}+ancilla" if ch.label else "ancilla-extended",
    )


def extend_nbody(
    ch: LowNoiseChannel,
    n: int,
    max_dim: int = DEFAULT_MAX_DIM,
    defect_probe_eps: float = 1e-2,
) -> LowNoiseChannel:
    """Tensor power of the channel, reorganized into low-noise form.

    The near-identity families are all n-fold products of the input B
    series (with product kappa weights).  The order-eps noise block keeps
    only the single-defect families: site i carries a C series, every other
    site a B series.  Terms with two or more C factors enter at order
    eps**2 and are dropped; their size is recorded in ``truncation_defect``
    as the eps**2 coefficient of the completeness residual, so the returned
    channel is complete only to O(eps**2) for n >= 2.
    """
    if not 1 <= n <= 3:
        raise DomainError(f"n must be between 1 and 3, got {n}")
    if ch.dim ** n > max_dim:
        raise DimensionError(
            f"n-body dimension {ch.dim ** n} exceeds the cap {max_dim}"
        )
    if n == 1:
        return ch

    nb = len(ch.b_series)
    nc = len(ch.c_series)
    if nb ** n > MAX_FAMILIES or n * nc * nb ** (n - 1) > MAX_FAMILIES:
        raise DimensionError(
            f"n-body extension would exceed the {MAX_FAMILIES}-family cap"
        )

    b_out = []
    kappa_out = []
    for combo in itertools.product(range(nb), repeat=n):
        series = reduce(
            lambda x, y: series_kron(x, y, max_dim=max_dim),
            (ch.b_series[i] for i in combo),
        )
        b_out.append(series)
        kappa_out.append(complex(np.prod([ch.kappas[i] for i in combo])))

    c_out = []
    for site in range(n):
        for beta in range(nc):
            for combo in itertools.product(range(nb), repeat=n - 1):
                rest = iter(combo)
                factors = [
                    ch.c_series[beta] if j == site else ch.b_series[next(rest)]
                    for j in range(n)
                ]
                c_out.append(
                    reduce(lambda x, y: series_kron(x, y, max_dim=max_dim), factors)
                )

    ext = LowNoiseChannel(
        dim=ch.dim ** n,
        b_series=tuple(b_out),
        c_series=tuple(c_out),
        kappas=tuple(kappa_out),
        label=f"{ch.label}^(x{n})" if ch.label else f"nbody-{n}",
    )
    defect = completeness_residual(ext, defect_probe_eps) / defect_probe_eps ** 2
    return replace(ext, truncation_defect=float(defect))


def _sqrt_series_coefficients(order: int) -> list[float]:
    """Scalar Taylor coefficients of sqrt(1 - x) through the given order."""
    a = [1.0]
    for k in range(order):
        a.append(-a[-1] * (0.5 - k) / (k + 1))
    return a


def _solve_b_series(target: list[np.ndarray], order: int) -> list[np.ndarray]:
    """Order-by-order Hermitian solution of B(eps)† B(eps) = target(eps).

    ``target`` holds the Hermitian coefficient matrices of the right-hand
    side, with target[0] = I.  At each order the Hermitian branch is chosen,
    which makes the anticommutator with B(0) = I invertible.
    """
    dim = target[0].shape[0]
    b = [np.eye(dim, dtype=complex)]
    for k in range(1, order + 1):
        t_k = target[k] if k < len(target) else np.zeros((dim, dim), dtype=complex)
        s = t_k.astype(complex)
        for j in range(1, k):
            s = s - b[j] @ b[k - j]
        b.append(hermitize(s / 2.0))
    return b


def catalog(
    name: str,
    dim: int = 2,
    truncation_order: int = DEFAULT_TRUNCATION_ORDER,
    seed: int | None = None,
) -> LowNoiseChannel:
    """Build one of the standard low-noise channels.

    Names: ``identity``, ``depolarizing``, ``amplitude_damping``,
    ``phase_flip`` (qubit-only Pauli constructions) and ``random_lownoise``
    (seed required; random noise family with the near-identity series solved
    order-by-order so the completeness condition holds through the
    truncation order).
    """
    if name not in CATALOG_NAMES:
        raise UsageError(
            f"unknown catalog channel {name!r}; choose from {', '.join(CATALOG_NAMES)}"
        )
    if truncation_order < 0:
        raise DomainError("truncation_order must be >= 0")

    if name == "identity":
        eye = np.eye(dim, dtype=complex)
        return LowNoiseChannel(
            dim=dim,
            b_series=(OperatorSeries((eye,)),),
            c_series=(),
            kappas=(1.0,),
            label="identity",
        )

    if name == "random_lownoise":
        if seed is None:
            raise UsageError("random_lownoise requires a seed")
        return _random_lownoise(dim, truncation_order, seed)

    if dim != 2:
        raise UsageError(f"catalog channel {name!r} is defined for qubits (dim=2) only")

    eye = np.eye(2, dtype=complex)
    sqrt_coeffs = _sqrt_series_coefficients(truncation_order)

    if name == "depolarizing":
        b = OperatorSeries(tuple(a * eye for a in sqrt_coeffs))
        noise = tuple(
            OperatorSeries((p / np.sqrt(3.0),)) for p in (PAULI_X, PAULI_Y, PAULI_Z)
        )
        return LowNoiseChannel(2, (b,), noise, (1.0,), "depolarizing")

    if name == "phase_flip":
        b = OperatorSeries(tuple(a * eye for a in sqrt_coeffs))
        return LowNoiseChannel(2, (b,), (OperatorSeries((PAULI_Z,)),), (1.0,), "phase_flip")

    # amplitude damping: B = diag(1, sqrt(1 - eps)), C = |0><1|
    coeffs = [np.diag([1.0, sqrt_coeffs[0]]).astype(complex)]
    for a in sqrt_coeffs[1:]:
        coeffs.append(np.diag([0.0, a]).astype(complex))
    lower = np.array([[0, 1], [0, 0]], dtype=complex)
    return LowNoiseChannel(
        2,
        (OperatorSeries(tuple(coeffs)),),
        (OperatorSeries((lower,)),),
        (1.0,),
        "amplitude_damping",
    )


def _random_lownoise(dim: int, order: int, seed: int, n_noise: int = 3) -> LowNoiseChannel:
    rng = np.random.default_rng(seed)
    ms = [
        (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim)))
        / np.sqrt(2.0)
        for _ in range(n_noise)
    ]
    s = sum(m.conj().T @ m for m in ms)
    # Spectral norm 1 keeps the truncation tail of the square-root series small.
    scale = 1.0 / np.linalg.norm(s, 2)
    ms = [m * np.sqrt(scale) for m in ms]
    s = hermitize(s * scale)

    target = [np.eye(dim, dtype=complex), -s]
    b_coeffs = _solve_b_series(target, order)
    return LowNoiseChannel(
        dim=dim,
        b_series=(OperatorSeries(tuple(b_coeffs)),),
        c_series=tuple(OperatorSeries((m,)) for m in ms),
        kappas=(1.0,),
        label=f"random_lownoise(seed={seed})",
    )


# ---------------------------------------------------------------------------
# JSON interchange
# ---------------------------------------------------------------------------
#
# Channel spec files are UTF-8 JSON:
#
#   {"dim": 2, "truncation_order": 6, "label": "...",
#    "b_series": [{"kappa": [re, im], "coefficients": [matrix, ...]}, ...],
#    "c_series": [{"coefficients": [matrix, ...]}, ...]}
#
# where matrix is a row-major nested array of [re, im] pairs.  The order-0
# coefficient of a b_series entry may be omitted (implied kappa * identity)
# either by writing null in its place or by omitting "coefficients" entirely.


def _matrix_to_json(m: np.ndarray) -> list:
    a = np.asarray(m, dtype=complex)
    return [[[float(x.real), float(x.imag)] for x in row] for row in a]


def _matrix_from_json(obj, field: str, dim: int) -> np.ndarray:
    try:
        a = np.asarray(obj, dtype=float)
    except (TypeError, ValueError) as exc:
        raise SpecFileError(field, f"not a nested numeric array ({exc})") from None
    if a.ndim != 3 or a.shape[2] != 2:
        raise SpecFileError(field, f"expected rows of [re, im] pairs, got shape {a.shape}")
    if a.shape[0] != dim or a.shape[1] != dim:
        raise SpecFileError(field, f"matrix is {a.shape[0]}x{a.shape[1]}, expected {dim}x{dim}")
    return a[..., 0] + 1j * a[..., 1]


def channel_to_dict(ch: LowNoiseChannel) -> dict:
    """Serialize a channel to the JSON interchange structure."""
    return {
        "dim": ch.dim,
        "truncation_order": ch.truncation_order,
        "label": ch.label,
        "b_series": [
            {
                "kappa": [float(k.real), float(k.imag)],
                "coefficients": [_matrix_to_json(c) for c in s.coefficients],
            }
            for s, k in zip(ch.b_series, ch.kappas)
        ],
        "c_series": [
            {"coefficients": [_matrix_to_json(c) for c in s.coefficients]}
            for s in ch.c_series
        ],
    }


def channel_from_dict(data: dict) -> LowNoiseChannel:
    """Build a channel from the JSON interchange structure.

    Raises `SpecFileError` naming the offending field on any malformed entry.
    """
    if not isinstance(data, dict):
        raise SpecFileError("$", "top level must be a JSON object")
    try:
        dim = int(data["dim"])
    except KeyError:
        raise SpecFileError("dim", "missing required field") from None
    except (TypeError, ValueError):
        raise SpecFileError("dim", "must be an integer") from None
    if dim < 1:
        raise SpecFileError("dim", f"must be positive, got {dim}")

    label = data.get("label", "")
    if not isinstance(label, str):
        raise SpecFileError("label", "must be a string")

    raw_b = data.get("b_series")
    if not isinstance(raw_b, list) or not raw_b:
        raise SpecFileError("b_series", "must be a nonempty list")
    raw_c = data.get("c_series", [])
    if not isinstance(raw_c, list):
        raise SpecFileError("c_series", "must be a list")

    eye = np.eye(dim, dtype=complex)
    b_series = []
    kappas = []
    for i, entry in enumerate(raw_b):
        field = f"b_series[{i}]"
        if not isinstance(entry, dict):
            raise SpecFileError(field, "must be an object")
        kap = entry.get("kappa")
        if (
            not isinstance(kap, (list, tuple))
            or len(kap) != 2
            or not all(isinstance(x, (int, float)) for x in kap)
        ):
            raise SpecFileError(f"{field}.kappa", "expected [re, im]")
        kappa = complex(kap[0], kap[1])
        raw_coeffs = entry.get("coefficients")
        if raw_coeffs is None:
            coeffs = [kappa * eye]
        else:
            if not isinstance(raw_coeffs, list) or not raw_coeffs:
                raise SpecFileError(f"{field}.coefficients", "must be a nonempty list")
            coeffs = []
            for k, c in enumerate(raw_coeffs):
                if k == 0 and c is None:
                    coeffs.append(kappa * eye)
                else:
                    coeffs.append(_matrix_from_json(c, f"{field}.coefficients[{k}]", dim))
        try:
            b_series.append(OperatorSeries(tuple(coeffs)))
        except (DimensionError, ContractViolationError) as exc:
            raise SpecFileError(f"{field}.coefficients", str(exc)) from None
        kappas.append(kappa)

    c_series = []
    for i, entry in enumerate(raw_c):
        field = f"c_series[{i}]"
        if not isinstance(entry, dict):
            raise SpecFileError(field, "must be an object")
        raw_coeffs = entry.get("coefficients")
        if not isinstance(raw_coeffs, list) or not raw_coeffs:
            raise SpecFileError(f"{field}.coefficients", "must be a nonempty list")
        coeffs = [
            _matrix_from_json(c, f"{field}.coefficients[{k}]", dim)
            for k, c in enumerate(raw_coeffs)
        ]
        try:
            c_series.append(OperatorSeries(tuple(coeffs)))
        except (DimensionError, ContractViolationError) as exc:
            raise SpecFileError(f"{field}.coefficients", str(exc)) from None

    try:
        ch = LowNoiseChannel(dim, tuple(b_series), tuple(c_series), tuple(kappas), label)
    except (DimensionError, ContractViolationError) as exc:
        raise SpecFileError("$", str(exc)) from None

    declared = data.get("truncation_order")
    if declared is not None and int(declared) != ch.truncation_order:
        raise SpecFileError(
            "truncation_order",
            f"declared {declared} but series imply {ch.truncation_order}",
        )
    return ch


def save_channel(ch: LowNoiseChannel, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(channel_to_dict(ch), fh, indent=2)
        fh.write("\n")


def load_channel(path, eps_grid=DEFAULT_VALIDATION_GRID, allow_invalid: bool = False) -> LowNoiseChannel:
    """Load a channel spec file, validating it unless ``allow_invalid``.

    Raises `UsageError` for unreadable files, `SpecFileError` for malformed
    content, and `ChannelValidationError` (carrying the report) when the
    loaded channel fails validation and the override flag is not set.
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read channel spec {path}: {exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFileError("$", f"invalid JSON: {exc}") from None
    ch = channel_from_dict(data)
    if not allow_invalid:
        report = validate(ch, eps_grid)
        if not report.passed:
            raise ChannelValidationError(report, f"channel spec {path} failed validation")
    return ch
