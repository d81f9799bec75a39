"""Figures for the Dehn filling sweeps.  Rendering goes to files only."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def _finish(fig, path):
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_length_law(samples, path):
    """Measured core length against p^2 + q^2, with the curve 2 pi / N."""
    norms = [s.p * s.p + s.q * s.q for s in samples]
    fig, (ax, err) = plt.subplots(1, 2, figsize=(10, 4))
    ax.loglog(norms, [s.length for s in samples], ".", ms=3, label="Re complex length")
    n_max = max(norms)
    grid = [1 + k * (n_max - 1) / 400 for k in range(401)]
    ax.loglog(grid, [2 * math.pi / n for n in grid], "-", lw=1, label=r"$2\pi/(p^2+q^2)$")
    ax.set_xlabel(r"$p^2+q^2$")
    ax.set_ylabel("core geodesic length")
    ax.legend()

    err.semilogy(norms, [max(s.error, 1e-18) for s in samples], ".", ms=3, label="length error")
    err.semilogy(norms, [max(s.relation, 1e-18) for s in samples], ".", ms=3, label="relation residual")
    err.set_xlabel(r"$p^2+q^2$")
    err.set_ylabel("absolute error")
    err.legend()
    return _finish(fig, path)


def plot_convergence(ws, residuals, path):
    """Conjugation residuals against |w| on log axes."""
    fig, ax = plt.subplots(figsize=(5, 4))
    x = [abs(w) for w in ws]
    ax.loglog(x, [max(r[0], 1e-18) for r in residuals], "o-", label=r"$|E A E^{-1} - A_\infty|$")
    ax.loglog(x, [max(r[1], 1e-18) for r in residuals], "s--", label="closed form residual")
    ax.set_xlabel("|w|")
    ax.set_ylabel("residual")
    ax.legend()
    return _finish(fig, path)
