"""Figure output: deterministic SVG edge diagrams and the counts growth chart.

The SVG path is hand-assembled text so identical inputs yield byte-identical
files — no renderer state, no timestamps.  The growth chart goes through
matplotlib with its content-hash salt pinned for the same reason.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .counting import CountReport
from .errors import DomainError
from .geometry import Edge, GraphContext, check_edge

CANVAS = 440
CENTER = CANVAS / 2
RADIUS = 200.0
LABEL_RADIUS = 181.0
HIGHLIGHT_CLASSES = ("spine", "legs", "matching", "crossing-pair")

_STYLE = """\
  <style>
    .ring { stroke: #d8d8d8; stroke-width: 1; fill: none; }
    .edge { stroke: #555555; stroke-width: 1.5; }
    .edge.spine { stroke: #b03a2e; stroke-width: 5; }
    .edge.legs { stroke: #b03a2e; stroke-width: 2.5; }
    .edge.matching { stroke: #1f618d; stroke-width: 2.5; }
    .edge.crossing-pair { stroke: #1e8449; stroke-width: 2.5; stroke-dasharray: 7 4; }
    .vertex { fill: #222222; }
    .label { font-family: 'DejaVu Sans Mono', monospace; font-size: 13px;
             text-anchor: middle; dominant-baseline: central; fill: #222222; }
  </style>"""


@dataclass(frozen=True)
class RenderSpec:
    """What to draw: the edges of one diagram plus optional highlight classes.

    Highlight classes must name distinct subsets of the drawn edges; an edge
    can carry at most one class.
    """

    ctx: GraphContext
    edges: tuple[Edge, ...]
    highlights: Mapping[str, tuple[Edge, ...]] = field(default_factory=dict)
    out: str | None = None

    def __post_init__(self) -> None:
        seen = set()
        for e in self.edges:
            check_edge(self.ctx, e)
            if e in seen:
                raise DomainError(f"edge {e} is listed twice")
            seen.add(e)
        claimed = set()
        for cls, members in self.highlights.items():
            if cls not in HIGHLIGHT_CLASSES:
                raise DomainError(
                    f"unknown highlight class {cls!r}; choose from {HIGHLIGHT_CLASSES}"
                )
            for e in members:
                if e not in seen:
                    raise DomainError(f"highlighted edge {e} is not among the drawn edges")
                if e in claimed:
                    raise DomainError(f"edge {e} appears in two highlight classes")
                claimed.add(e)

    def edge_class(self, e: Edge) -> str | None:
        for cls, members in self.highlights.items():
            if e in members:
                return cls
        return None


def vertex_position(ctx: GraphContext, k: int, radius: float = RADIUS) -> tuple[float, float]:
    """Vertex k on the circle: label 0 at the top, labels increasing clockwise."""
    ctx.check_vertex(k)
    theta = math.radians(90.0 - 360.0 * k / ctx.n)
    # SVG's y axis grows downward, hence the minus.
    return CENTER + radius * math.cos(theta), CENTER - radius * math.sin(theta)


def _fmt(value: float) -> str:
    # round() first so "-0.00" can never appear in the output
    return f"{round(value, 2) + 0.0:.2f}"


def render_svg(spec: RenderSpec) -> str:
    """The diagram as SVG text; equal specs produce equal bytes."""
    ctx = spec.ctx
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS}" height="{CANVAS}" '
        f'viewBox="0 0 {CANVAS} {CANVAS}">',
        _STYLE,
        f'  <circle class="ring" cx="{_fmt(CENTER)}" cy="{_fmt(CENTER)}" r="{_fmt(RADIUS)}"/>',
    ]
    for e in spec.edges:
        x1, y1 = vertex_position(ctx, e.u)
        x2, y2 = vertex_position(ctx, e.v)
        cls = spec.edge_class(e)
        attr = f'class="edge {cls}"' if cls else 'class="edge"'
        parts.append(
            f'  <line {attr} x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
            f'x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>'
        )
    for k in range(ctx.n):
        x, y = vertex_position(ctx, k)
        parts.append(f'  <circle class="vertex" cx="{_fmt(x)}" cy="{_fmt(y)}" r="4.00"/>')
    for k in range(ctx.n):
        lx, ly = vertex_position(ctx, k, LABEL_RADIUS)
        parts.append(f'  <text class="label" x="{_fmt(lx)}" y="{_fmt(ly)}">{k}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write_svg(spec: RenderSpec, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_svg(spec))


def render_count_figure(reports: Sequence[CountReport], path: str) -> None:
    """Growth chart of the counts table, written to an image file.

    All family sizes grow at least exponentially, so the vertical axis is
    logarithmic.  Renders through the Agg backend with a pinned hash salt
    and fixed metadata, keeping repeated runs byte-identical.
    """
    if not reports:
        raise DomainError("cannot plot an empty counts table")
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    plt.rcParams["svg.hashsalt"] = "cgg"
    ms = [r.m for r in reports]
    fig, ax = plt.subplots(figsize=(6.4, 4.4), dpi=100)
    ax.plot(ms, [r.spm_count for r in reports], marker="o", label="simple matchings")
    ax.plot(ms, [r.blocker_count for r in reports], marker="s", label="blockers")
    computed = [(r.m, r.coblocker_count) for r in reports if r.coblocker_count is not None]
    if computed:
        ax.plot(
            [m for m, _ in computed],
            [c for _, c in computed],
            marker="D",
            label="co-blockers",
        )
    ax.plot(ms, [r.lower_bound for r in reports], "--", marker="^", label="floor(m/3)!")
    ax.plot(ms, [r.upper_bound for r in reports], "--", marker="v", label="m!")
    ax.set_yscale("log")
    ax.set_xlabel("m")
    ax.set_ylabel("family size")
    ax.set_title("Matching and blocker family sizes")
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    metadata = {"Date": None} if path.endswith(".svg") else {"Software": "cgg"}
    fig.savefig(path, metadata=metadata)
    plt.close(fig)
