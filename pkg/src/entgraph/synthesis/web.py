"""Pure web states for complete graphs.

alpha|0..0> + beta|1..1> + (gamma / sqrt(k)) * sum over the k entangled pairs
of |1_i 1_j>. Whether a given parameter choice realizes the intended graph is
checked per instance by the pair classifier.
"""

import logging
import math
from collections.abc import Iterator

import numpy as np

from entgraph.core.config import get_settings
from entgraph.core.exceptions import WebParameterError
from entgraph.graphs import is_complete_web, require_valid
from entgraph.models.graph import EntangledGraph
from entgraph.models.state import PureState
from entgraph.models.synthesis import WebParameters, WebRealization
from entgraph.models.verdict import Tolerances

logger = logging.getLogger(__name__)


def default_parameters(g: EntangledGraph) -> WebParameters:
    if not g.entangled:
        half = 1.0 / math.sqrt(2.0)
        return WebParameters(alpha=half, beta=half, gamma=0.0)
    third = 1.0 / math.sqrt(3.0)
    return WebParameters(alpha=third, beta=third, gamma=third)


def build_web(
    g: EntangledGraph,
    alpha: float,
    beta: float,
    gamma: float,
    norm_tol: float = 1e-10,
) -> PureState:
    """Web state over qubits 0..n-1 for the complete web ``g``."""
    require_valid(g)
    if not is_complete_web(g):
        raise WebParameterError("web states are defined for complete webs only (M = 0)")
    if g.n < 3:
        raise WebParameterError("web states need at least three qubits")
    k = len(g.entangled)
    if alpha <= 0 or beta <= 0 or gamma < 0:
        raise WebParameterError(
            f"alpha and beta must be positive, gamma non-negative: {alpha}, {beta}, {gamma}"
        )
    if k == 0 and gamma > 0:
        raise WebParameterError("gamma must be 0 when there are no entanglement edges")
    if k > 0 and gamma == 0:
        raise WebParameterError("gamma must be positive when there are entanglement edges")
    if abs(alpha**2 + beta**2 + gamma**2 - 1.0) > norm_tol:
        raise WebParameterError("alpha^2 + beta^2 + gamma^2 must equal 1")

    n = g.n
    amplitudes = np.zeros(2**n, dtype=complex)
    amplitudes[0] = alpha
    amplitudes[-1] = beta
    for i, j in g.entangled:
        amplitudes[(1 << (n - 1 - i)) | (1 << (n - 1 - j))] = gamma / math.sqrt(k)
    return PureState.on_range(amplitudes)


def simplex_grid(g: EntangledGraph, grid: int) -> Iterator[WebParameters]:
    """Interior points of the squared-amplitude simplex, ``grid`` points per side."""
    steps = grid - 1
    if not g.entangled:
        for a in range(1, steps):
            alpha2 = a / steps
            yield WebParameters(alpha=math.sqrt(alpha2), beta=math.sqrt(1.0 - alpha2), gamma=0.0)
        return
    for a in range(1, steps - 1):
        for b in range(1, steps - a):
            c = steps - a - b
            yield WebParameters(
                alpha=math.sqrt(a / steps), beta=math.sqrt(b / steps), gamma=math.sqrt(c / steps)
            )


def _renormalized(p: WebParameters) -> WebParameters:
    norm = math.sqrt(p.alpha**2 + p.beta**2 + p.gamma**2)
    return WebParameters(alpha=p.alpha / norm, beta=p.beta / norm, gamma=p.gamma / norm)


def realize_web(
    g: EntangledGraph,
    grid: int | None = None,
    tol: Tolerances | None = None,
) -> WebRealization:
    """Find web parameters whose state classifies exactly to ``g``.

    The default parameters are tried first, then the simplex grid sweep.
    A failed realization is returned unverified, not raised.

    Parameters
    ----------
    g : EntangledGraph
        Complete web on at least three vertices.
    grid : int, optional
        Points per simplex side; defaults to ``web_grid``.
    tol : Tolerances, optional
        Thresholds the candidate state is classified with.

    Returns
    -------
    WebRealization
        The first verified parameters and state, with the attempt count.
    """
    from entgraph.analysis.classifier import extract_graph

    grid = grid or get_settings().web_grid
    tol = tol or Tolerances.from_settings()
    attempts = 0
    swept = False

    def _candidates() -> Iterator[WebParameters]:
        nonlocal swept
        yield default_parameters(g)
        swept = True
        yield from simplex_grid(g, grid)

    for params in _candidates():
        params = _renormalized(params)
        attempts += 1
        state = build_web(g, params.alpha, params.beta, params.gamma)
        if extract_graph(state, tol).graph == g:
            logger.info(
                "Web realized for n=%d, k=%d after %d attempt(s): alpha=%.4f beta=%.4f gamma=%.4f",
                g.n,
                len(g.entangled),
                attempts,
                params.alpha,
                params.beta,
                params.gamma,
            )
            return WebRealization(
                parameters=params, state=state, verified=True, attempts=attempts, swept=swept
            )

    logger.warning(
        "No web parameters realize n=%d with S^E=%s (%d attempts)",
        g.n,
        list(g.entangled),
        attempts,
    )
    return WebRealization(attempts=attempts, swept=swept)
