"""Real slices of the null conic and the trope sextic, rendered as SVG contours.

The plane is drawn in the real form x = (xi1, xi2, i xi3), where the null
conic (x, x) = 0 becomes xi1^2 + xi2^2 = xi3^2. A chart fixes one xi to 1.
The sextic is complex-valued there, so its zero contour is drawn for the
real or imaginary part, whichever is larger on the grid.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .poly_core import Gauss, Poly
from .trope_geometry import trope_sextic

CHARTS = ("xi1", "xi2", "xi3")
CURVES = ("conic", "sextic", "both")


@dataclass
class PlotSummary:
    path: str
    chart: str
    curves: dict  # curve name -> number of contour segments drawn
    sextic_part: str | None  # "real" or "imaginary"


def _complex(c) -> complex:
    if isinstance(c, Gauss):
        return complex(float(c.re), float(c.im))
    return complex(float(c))


def _chart_grid(chart: str, extent: float, resolution: int):
    if chart not in CHARTS:
        raise DomainError(f"chart must be one of {CHARTS}, got {chart!r}")
    s = np.linspace(-extent, extent, resolution)
    U, V = np.meshgrid(s, s)
    one = np.ones_like(U)
    fixed = CHARTS.index(chart)
    coords = [U, V]
    xi = coords[:fixed] + [one] + coords[fixed:]
    free = [name for name in CHARTS if name != chart]
    return U, V, xi, free


def evaluate_form(form, xi) -> np.ndarray:
    """A ternary form at x = (xi1, xi2, i xi3) over numpy grids."""
    x = (xi[0].astype(complex), xi[1].astype(complex), 1j * xi[2])
    out = np.zeros_like(x[0])
    for (a, b, c), coeff in form.terms.items():
        out = out + _complex(coeff) * x[0] ** a * x[1] ** b * x[2] ** c
    return out


def plot_slice(p: Poly, curve: str, out: str, chart: str = "xi3", mode: str = "literal",
               extent: float = 2.0, resolution: int = 400) -> PlotSummary:
    """Write an SVG with the zero contours of the requested curves."""
    if curve not in CURVES:
        raise DomainError(f"curve must be one of {CURVES}, got {curve!r}")
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    matplotlib.rcParams["svg.hashsalt"] = "spinlag"
    U, V, xi, free = _chart_grid(chart, extent, resolution)
    fig, ax = plt.subplots(figsize=(6, 6))
    drawn, part = {}, None
    handles = []
    if curve in ("conic", "both"):
        conic = xi[0] ** 2 + xi[1] ** 2 - xi[2] ** 2
        cs = ax.contour(U, V, conic, levels=[0], colors="tab:blue", linewidths=1.5)
        drawn["conic"] = sum(len(seg) for seg in cs.allsegs)
        handles.append(plt.Line2D([], [], color="tab:blue", label="null conic"))
    if curve in ("sextic", "both"):
        values = evaluate_form(trope_sextic(p, mode), xi)
        re, im = values.real, values.imag
        part = "real" if np.abs(re).max() >= np.abs(im).max() else "imaginary"
        field = re if part == "real" else im
        cs = ax.contour(U, V, field, levels=[0], colors="tab:red", linewidths=1.0)
        drawn["sextic"] = sum(len(seg) for seg in cs.allsegs)
        handles.append(plt.Line2D([], [], color="tab:red", label=f"trope sextic ({part} part)"))
    ax.set_xlabel(free[0])
    ax.set_ylabel(free[1])
    ax.set_title(f"chart {chart} = 1")
    ax.set_aspect("equal")
    ax.legend(handles=handles, loc="upper right")
    fig.savefig(out, format="svg", metadata={"Date": None})
    plt.close(fig)
    return PlotSummary(out, chart, drawn, part)
