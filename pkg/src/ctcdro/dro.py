"""Group-weight update rules on the probability simplex.

Two multiplicative updates are provided: the classic exponentiated
ascent on weighted group losses, and a smoothed variant whose exponent
divides the loss by (q_g + alpha), damping updates to already-heavy
groups. The smoothed rule maximizes sum_g log(q_g + alpha) * L_g over
the simplex, and its interior optimum has a closed form exposed as
``optimal_weights``.
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class DroHyper:
    """Step size and smoothing for the smoothed update rule."""

    eta_q: float
    alpha: float

    def __post_init__(self):
        if not self.eta_q > 0:
            raise ValueError("eta_q must be positive")
        if self.alpha < 0:
            raise ValueError("alpha must be nonnegative")


def _check_inputs(q, losses):
    q = np.asarray(q, dtype=float)
    losses = np.asarray(losses, dtype=float)
    if q.shape != losses.shape or q.ndim != 1:
        raise ValueError("q and losses must be 1-d vectors of equal length")
    if np.any(q < 0) or abs(q.sum() - 1.0) > 1e-9:
        raise ValueError("q must lie on the probability simplex")
    if not np.all(np.isfinite(losses)):
        raise ValueError("losses must be finite")
    return q, losses


def _renormalize_exp(log_weights):
    # Subtracting the max before exponentiation guards against overflow
    # and cancels in the normalization.
    w = np.exp(log_weights - np.max(log_weights))
    return w / w.sum()


def group_dro_update(q, losses, eta_q):
    """Multiplicative ascent: q'_g proportional to q_g * exp(eta_q * L_g)."""
    q, losses = _check_inputs(q, losses)
    if not eta_q > 0:
        raise ValueError("eta_q must be positive")
    with np.errstate(divide="ignore"):
        log_w = np.log(q) + eta_q * losses
    return _renormalize_exp(log_w)


def ctc_dro_update(q, losses, hyper):
    """Smoothed ascent: q'_g proportional to q_g * exp(eta_q * L_g / (q_g + alpha)).

    Groups with lower current weight receive larger multiplicative
    factors for the same loss. Requires alpha > 0 whenever some q_g is
    zero, since the exponent divides by q_g + alpha.
    """
    q, losses = _check_inputs(q, losses)
    if hyper.alpha == 0 and np.any(q == 0):
        raise ZeroDivisionError("alpha=0 with a zero group weight")
    with np.errstate(divide="ignore"):
        log_w = np.log(q) + hyper.eta_q * losses / (q + hyper.alpha)
    return _renormalize_exp(log_w)


def optimal_weights(losses, alpha):
    """Closed-form maximizer of sum_g log(q_g + alpha) * L_g on the simplex.

    q*_g = L_g * (1 + |G| * alpha) / sum(L) - alpha. Entries sum to 1 by
    construction; the formula assumes an interior optimum, so a validity
    flag reports whether all entries are strictly positive instead of
    projecting.
    """
    losses = np.asarray(losses, dtype=float)
    total = losses.sum()
    if not total > 0:
        raise ValueError("losses must have positive sum")
    n = losses.size
    q_star = losses * (1.0 + n * alpha) / total - alpha
    valid = bool(np.all(q_star > 0))
    return q_star, valid


NORM_MODES = ("none", "frame", "target")


def normalize_losses(per_utterance, mode):
    """Per-utterance loss normalization variants.

    per_utterance: iterable of (loss, frames, targets) triples.
    mode "none" returns losses unchanged, "frame" divides by the frame
    count, "target" by max(target count, 1).
    """
    if mode not in NORM_MODES:
        raise ValueError(f"mode must be one of {NORM_MODES}, got {mode!r}")
    out = []
    for loss, frames, targets in per_utterance:
        if frames < 1:
            raise ValueError("frame count must be >= 1")
        if mode == "frame":
            loss = loss / frames
        elif mode == "target":
            loss = loss / max(targets, 1)
        out.append(loss)
    return out


def scale_for_descent(summed_batch_loss, q_g, group_count):
    """Scale a single-group summed batch loss by q_g * |G| for descent.

    At uniform weights the factor is 1, so the descent loss scale
    matches plain training and shared hyperparameters transfer.
    """
    if not 0.0 <= q_g <= 1.0:
        raise ValueError("q_g must lie in [0, 1]")
    return q_g * group_count * summed_batch_loss
