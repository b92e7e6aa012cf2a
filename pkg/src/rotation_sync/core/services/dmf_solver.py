"""
Deep matrix factorization solver.

The completed matrix is parametrized as W = W_d···W_1 with square factors
and trained by full-batch gradient descent with classical momentum on the
masked entry-wise l1 (or l2) completion loss. This is the same optimization
problem as training a bias-free linear network of d layers whose forward
pass multiplies its weight matrices; the factor product is used directly.
"""
import logging
import math
from typing import Optional, Sequence

import numpy as np

from rotation_sync.core.domain.config import (
    DIVERGENCE_FACTOR,
    PROGRESS_LOG_INTERVAL,
    REPORTED_SINGULAR_VALUES,
)
from rotation_sync.core.domain.entities.block_matrix import ObservedBlockMatrix
from rotation_sync.core.domain.entities.factorization import (
    FactorStack,
    LossKind,
    SolveReport,
    SolverConfig,
    StopReason,
)
from rotation_sync.core.domain.errors import DimensionMismatchError, DivergenceError
from rotation_sync.core.services.block_matrix import completion_residual, heldout_error

logger = logging.getLogger(__name__)


def init_factors(n: int, config: SolverConfig) -> FactorStack:
    """
    Draw d factors of size 3n x 3n with i.i.d. N(0, init_std²) entries.

    The stack is fully determined by ``config.seed``; velocities start at zero.
    """
    rng = np.random.default_rng(config.seed)
    size = 3 * n
    factors = tuple(
        rng.normal(0.0, config.init_std, size=(size, size)) for _ in range(config.depth)
    )
    return FactorStack.at_rest(factors)


def product(stack: FactorStack) -> np.ndarray:
    """The end-to-end matrix W_d···W_1."""
    result = stack.factors[0]
    for factor in stack.factors[1:]:
        result = factor @ result
    return result


def _loss_gradient(stack: FactorStack, obs: ObservedBlockMatrix,
                   loss: LossKind) -> tuple[float, np.ndarray, list[np.ndarray]]:
    """
    Evaluate the loss, the product and the gradient of every factor.

    Prefix products W_k···W_1 and suffix products W_d···W_k are cached so
    the whole gradient costs O(d) matrix products.
    """
    if stack.size != obs.size:
        raise DimensionMismatchError(
            f"Factors are {stack.size}x{stack.size}, observed matrix is {obs.size}x{obs.size}"
        )
    factors = stack.factors
    depth = len(factors)

    # prefixes[t] = W_t···W_1, prefixes[0] stands for the identity
    prefixes: list[Optional[np.ndarray]] = [None, factors[0]]
    for t in range(1, depth):
        prefixes.append(factors[t] @ prefixes[t])
    # suffixes[t] = W_d···W_{t+1} in 0-based factor indexing, suffixes[depth] is the identity
    suffixes: list[Optional[np.ndarray]] = [None] * (depth + 1)
    suffixes[depth - 1] = factors[depth - 1]
    for t in range(depth - 2, 0, -1):
        suffixes[t] = suffixes[t + 1] @ factors[t]

    w = prefixes[depth]
    residual = (w - obs.zhat) * obs.mask
    count = obs.observed_count
    if LossKind(loss) is LossKind.L1:
        value = float(np.abs(residual).sum() / count)
        seed = np.sign(residual) / count
    else:
        value = float(np.square(residual).sum() / count)
        seed = 2.0 * residual / count

    grads = []
    for t in range(depth):
        left = suffixes[t + 1]
        right = prefixes[t]
        grad = seed if left is None else left.T @ seed
        if right is not None:
            grad = grad @ right.T
        grads.append(grad)
    return value, w, grads


def gradient(stack: FactorStack, obs: ObservedBlockMatrix,
             loss: LossKind = LossKind.L1) -> list[np.ndarray]:
    """
    Gradient of the masked completion loss with respect to each factor.

    With S = sign((W − zhat) ⊙ Ω)/|Ω| for l1 (sign(0) = 0) or
    S = 2·((W − zhat) ⊙ Ω)/|Ω| for l2, the gradient of W_k is
    (W_d···W_{k+1})ᵀ·S·(W_{k−1}···W_1)ᵀ.

    Returns:
        list[np.ndarray]: Gradients ordered like ``stack.factors``

    Raises:
        DimensionMismatchError: If the factors do not match the observed matrix
    """
    return _loss_gradient(stack, obs, loss)[2]


def step(stack: FactorStack, grads: Sequence[np.ndarray], config: SolverConfig) -> FactorStack:
    """
    One classical-momentum update of every factor.

    velocity ← momentum·velocity + grad, factor ← factor − learning_rate·velocity.
    """
    velocity = tuple(
        config.momentum * v + g for v, g in zip(stack.velocity, grads)
    )
    factors = tuple(
        f - config.learning_rate * v for f, v in zip(stack.factors, velocity)
    )
    return FactorStack(factors=factors, velocity=velocity)


def _plateau_reached(history: list[float], config: SolverConfig, initial: float) -> bool:
    window = config.plateau_window
    if len(history) < 2 * window or len(history) % window:
        return False
    current = float(np.mean(history[-window:]))
    if current > config.plateau_arm_ratio * initial:
        return False
    previous = float(np.mean(history[-2 * window:-window]))
    return (previous - current) < config.plateau_rel_tol * abs(previous)


def _check_divergence(loss: float, initial: float, iteration: int) -> None:
    if not math.isfinite(loss) or loss > DIVERGENCE_FACTOR * initial:
        raise DivergenceError(
            f"Loss {loss:.3e} at iteration {iteration} exceeds {DIVERGENCE_FACTOR:.0e} "
            f"times the initial loss {initial:.3e}; lower the learning rate"
        )


def solve(obs: ObservedBlockMatrix, config: SolverConfig,
          z_true: Optional[np.ndarray] = None) -> SolveReport:
    """
    Complete the observed block matrix by deep matrix factorization.

    Iterates gradient steps from ``init_factors`` until ``max_iters`` or a
    loss plateau, and returns the product at the stopping point with its
    training instrumentation. The result depends only on (obs, config).

    Args:
        obs: Observed block matrix
        config: Solver hyper-parameters
        z_true: Optional complete ground-truth matrix used to report the
            held-out completion error

    Returns:
        SolveReport: The completed matrix and instrumentation

    Raises:
        DivergenceError: If the loss exceeds DIVERGENCE_FACTOR times its initial value
    """
    stack = init_factors(obs.n, config)
    history: list[float] = []
    initial = math.nan
    stop_reason = StopReason.MAX_ITERS
    iterations = 0

    for iteration in range(config.max_iters):
        loss, _, grads = _loss_gradient(stack, obs, config.loss)
        if iteration == 0:
            initial = loss
        _check_divergence(loss, initial, iteration)
        history.append(loss)

        if _plateau_reached(history, config, initial):
            stop_reason = StopReason.PLATEAU
            break
        if iteration % PROGRESS_LOG_INTERVAL == 0:
            logger.debug(f"iteration {iteration}: {config.loss.value} loss {loss:.6e}")

        stack = step(stack, grads, config)
        iterations += 1

    completed = product(stack)
    final_loss = completion_residual(completed, obs, config.loss)
    if history:
        _check_divergence(final_loss, initial, iterations)

    singular_values = np.linalg.svd(completed, compute_uv=False)[:REPORTED_SINGULAR_VALUES]
    logger.info(
        f"DMF solve stopped ({stop_reason.value}) after {iterations} iterations: "
        f"depth {config.depth}, {config.loss.value} loss {final_loss:.6e}"
    )
    return SolveReport(
        completed=completed,
        loss_history=np.asarray(history, dtype=float),
        singular_values=singular_values,
        iterations_run=iterations,
        stop_reason=stop_reason,
        final_loss=final_loss,
        config=config,
        heldout_error=heldout_error(completed, z_true, obs) if z_true is not None else None,
    )
