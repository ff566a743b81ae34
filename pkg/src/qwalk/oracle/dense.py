"""
Dense-matrix references for every step operator.

Each operator is written out as an explicit matrix over the flattened state
index (numpy C-order of the state's amplitude array) from Kronecker products
of coin projectors and one-site shift matrices. Nothing here shares code with
the step functions in ``qwalk.operators``; the two are compared in tests.
"""

import logging
import math

import numpy as np
from numpy.typing import NDArray

from ..models.config import BecStay, SignVariant
from ..models.errors import DimensionTooLargeError, ZeroNormError
from ..models.lattice import Lattice
from ..models.states import AmplitudeState

logger = logging.getLogger(__name__)

MAX_DIMENSION = 2048

DENSE_KINDS = (
    "hadamard_coin",
    "conditional_shift",
    "hadamard",
    "coinless",
    "extended",
    "classical",
    "pair",
    "bec_local_1",
    "bec_local_2",
    "bec",
)

P0 = np.array([[1, 0], [0, 0]], dtype=np.complex128)
P1 = np.array([[0, 0], [0, 1]], dtype=np.complex128)
FLIP = np.array([[0, 1], [1, 0]], dtype=np.complex128)
H = np.array([[1, 1], [1, -1]], dtype=np.complex128) / math.sqrt(2.0)


def _shifts(n: int) -> tuple[NDArray, NDArray]:
    """L sends |x> to |x-1>, R sends |x> to |x+1> (edge sites fall off)."""
    left = np.eye(n, k=1, dtype=np.complex128)
    right = np.eye(n, k=-1, dtype=np.complex128)
    return left, right


def _dimension(kind: str, n: int) -> int:
    if kind == "classical":
        return n
    if kind == "extended":
        return 4 * n
    if kind in ("pair", "bec_local_1", "bec_local_2", "bec"):
        return 4 * n * n
    return 2 * n


def _reduced(sign: SignVariant, n: int) -> NDArray:
    left, right = _shifts(n)
    s = sign.factor
    return (np.kron(P0, left + s * right) + np.kron(P1, right + s * left)) / math.sqrt(2.0)


def _bec_single(stay: BecStay, n: int) -> NDArray:
    left, right = _shifts(n)
    return stay.coefficient * np.eye(2 * n, dtype=np.complex128) + np.kron(FLIP, (left + right) / 2)


def _pair_order(matrix: NDArray, n: int) -> NDArray:
    """Reorder a (c1, x1, c2, x2) operator to the (c1, c2, x1, x2) state index."""
    t = matrix.reshape(2, n, 2, n, 2, n, 2, n)
    t = t.transpose(0, 2, 1, 3, 4, 6, 5, 7)
    return t.reshape(4 * n * n, 4 * n * n)


def dense_operator(
    kind: str,
    sign: SignVariant = SignVariant.PLUS,
    lattice: Lattice = Lattice(1),
    stay: BecStay = BecStay.BALANCED,
) -> NDArray[np.complex128]:
    """
    Explicit matrix of a step operator on ``lattice``.

    ``kind`` is one of DENSE_KINDS. For ``bec`` the matrix includes the
    projection onto x1 = x2 (but no renormalization).

    Raises:
        DimensionTooLargeError: If the matrix would exceed MAX_DIMENSION rows.
    """
    if kind not in DENSE_KINDS:
        raise ValueError(f"unknown operator kind {kind!r}; expected one of: {', '.join(DENSE_KINDS)}")
    n = lattice.size
    dim = _dimension(kind, n)
    if dim > MAX_DIMENSION:
        raise DimensionTooLargeError(f"{kind} operator on {n} sites has dimension {dim} > {MAX_DIMENSION}")
    sign, stay = SignVariant(sign), BecStay(stay)
    left, right = _shifts(n)
    identity = np.eye(n, dtype=np.complex128)

    if kind == "hadamard_coin":
        return np.kron(H, identity)
    if kind == "conditional_shift":
        return np.kron(P0, left) + np.kron(P1, right)
    if kind == "hadamard":
        return (np.kron(P0, left) + np.kron(P1, right)) @ np.kron(H, identity)
    if kind == "coinless":
        return _reduced(sign, n)
    if kind == "extended":
        return (
            np.kron(np.kron(P0, P0), left)
            + np.kron(np.kron(P0, P1), right)
            + np.kron(np.kron(P1, P0), right)
            + np.kron(np.kron(P1, P1), left)
        )
    if kind == "classical":
        return ((left + right) / 2).real
    if kind == "pair":
        single = _reduced(sign, n)
        return _pair_order(np.kron(single, single), n)

    single = _bec_single(stay, n)
    identity_single = np.eye(2 * n, dtype=np.complex128)
    if kind == "bec_local_1":
        return _pair_order(np.kron(single, identity_single), n)
    if kind == "bec_local_2":
        return _pair_order(np.kron(identity_single, single), n)
    colocated = np.kron(np.ones(4), np.eye(n).ravel())
    return np.diag(colocated).astype(np.complex128) @ _pair_order(np.kron(single, single), n)


def flatten(state: AmplitudeState) -> NDArray[np.complex128]:
    return state.amp.ravel().copy()


def unflatten(vector: NDArray, like: AmplitudeState) -> AmplitudeState:
    """State of the same type and lattice as ``like`` holding ``vector``."""
    return like.copy_with(np.asarray(vector).reshape(like.amp.shape))


def iterate_dense(
    matrix: NDArray, vector: NDArray, steps: int, normalize_each_step: bool = False
) -> tuple[NDArray, list[float]]:
    """
    Applies ``matrix`` ``steps`` times.

    Returns:
        The final vector and the norm of each image before rescaling.
    """
    prior_norms = []
    v = np.asarray(vector, dtype=np.complex128)
    for _ in range(steps):
        v = matrix @ v
        prior = float(np.linalg.norm(v))
        prior_norms.append(prior)
        if normalize_each_step:
            if prior < 1e-300:
                raise ZeroNormError("dense iteration annihilated the state")
            v = v / prior
    return v, prior_norms
