"""Pure-numpy CTC lattice kernels, vectorized over lattice states.

Fallback for the compiled extension; same contract. Both kernels work
in natural-log double precision and return +inf loss when the target is
unreachable at the given input length.
"""

import numpy as np

NEG_INF = -np.inf


def _lattice(labels, blank):
    """Blank-interleaved state sequence and skip-transition mask.

    State s may be entered from s-2 only when it is a label state whose
    label differs from the one two states back (a blank always separates
    repeats).
    """
    labels = np.asarray(labels, dtype=np.intp)
    s_count = 2 * labels.size + 1
    ext = np.full(s_count, blank, dtype=np.intp)
    ext[1::2] = labels
    skip = np.zeros(s_count, dtype=bool)
    if s_count > 3:
        skip[3::2] = ext[3::2] != ext[1:-2:2]
    return ext, skip


def forward(lp, labels, blank):
    """Negative log marginal probability of the label sequence."""
    lp = np.asarray(lp, dtype=np.float64)
    frames = lp.shape[0]
    ext, skip = _lattice(labels, blank)
    s_count = ext.size
    em = lp[:, ext]

    alpha = np.full(s_count, NEG_INF)
    alpha[0] = em[0, 0]
    if s_count > 1:
        alpha[1] = em[0, 1]
    shifted1 = np.empty(s_count)
    shifted2 = np.empty(s_count)
    for t in range(1, frames):
        shifted1[0] = NEG_INF
        shifted1[1:] = alpha[:-1]
        shifted2[:2] = NEG_INF
        shifted2[2:] = alpha[:-2]
        prev2 = np.where(skip, shifted2, NEG_INF)
        alpha = np.logaddexp(np.logaddexp(alpha, shifted1), prev2) + em[t]

    if s_count == 1:
        total = alpha[0]
    else:
        total = np.logaddexp(alpha[-1], alpha[-2])
    return -total


def forward_backward(lp, labels, blank):
    """Loss and its gradient with respect to the log-probability table."""
    lp = np.asarray(lp, dtype=np.float64)
    frames = lp.shape[0]
    ext, skip = _lattice(labels, blank)
    s_count = ext.size
    em = lp[:, ext]

    alpha = np.full((frames, s_count), NEG_INF)
    alpha[0, 0] = em[0, 0]
    if s_count > 1:
        alpha[0, 1] = em[0, 1]
    shifted1 = np.empty(s_count)
    shifted2 = np.empty(s_count)
    for t in range(1, frames):
        prev = alpha[t - 1]
        shifted1[0] = NEG_INF
        shifted1[1:] = prev[:-1]
        shifted2[:2] = NEG_INF
        shifted2[2:] = prev[:-2]
        prev2 = np.where(skip, shifted2, NEG_INF)
        alpha[t] = np.logaddexp(np.logaddexp(prev, shifted1), prev2) + em[t]

    if s_count == 1:
        total = alpha[-1, 0]
    else:
        total = np.logaddexp(alpha[-1, -1], alpha[-1, -2])
    if total == NEG_INF:
        return np.inf, np.zeros_like(lp)

    # beta includes the emission at its own frame, so alpha + beta counts
    # em twice; gamma subtracts one copy.
    beta = np.full((frames, s_count), NEG_INF)
    beta[-1, -1] = em[-1, -1]
    if s_count > 1:
        beta[-1, -2] = em[-1, -2]
    for t in range(frames - 2, -1, -1):
        nxt = beta[t + 1]
        shifted1[-1] = NEG_INF
        shifted1[:-1] = nxt[1:]
        shifted2[-2:] = NEG_INF
        shifted2[:-2] = np.where(skip[2:], nxt[2:], NEG_INF)
        beta[t] = np.logaddexp(np.logaddexp(nxt, shifted1), shifted2) + em[t]

    ab = alpha + beta
    with np.errstate(invalid="ignore"):
        gamma = np.where(np.isneginf(ab), NEG_INF, ab - em)
    posterior = np.exp(gamma - total)

    grad = np.zeros_like(lp)
    rows = np.broadcast_to(np.arange(frames)[:, None], posterior.shape)
    cols = np.broadcast_to(ext[None, :], posterior.shape)
    np.add.at(grad, (rows, cols), -posterior)
    return -total, grad
