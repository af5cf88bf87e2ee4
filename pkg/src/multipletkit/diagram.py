"""ASCII weight diagrams for rank-one loop pairs.

Energy runs up the page, the finite weight across.  Open circles mark the
multiplet (or kernel) weights, filled bullets the remaining weights of the
spin module.  Only odd columns are drawn, which is where the spin weights of
Lsu(2)/Lu(1) live.
"""

from __future__ import annotations

from typing import Dict, Iterable, Set, Tuple

from .characters import CharacterSeries, affine_spin_character
from .errors import MultipletkitError
from .multiplets import affine_multiplet
from .rootsystem import RootData, RootSystem
from .weyl import AffineWeight

OPEN = "∘"
FILLED = "•"
CELL = 3

Cell = Tuple[int, int]


def _cells(points: Iterable[AffineWeight]) -> Set[Cell]:
    out = set()
    for p in points:
        if len(p.lam) != 1:
            raise MultipletkitError("weight diagrams are drawn for rank one only")
        if p.m.denominator != 1 or p.lam[0].denominator != 1:
            raise MultipletkitError(f"non-integral diagram point {p}")
        out.add((int(p.m), int(p.lam[0])))
    return out


def series_support(series: CharacterSeries) -> Set[Cell]:
    out = set()
    for m, ch in series.coeffs.items():
        for w in ch.weights():
            if ch[w]:
                out.add((int(m), int(w[0])))
    return out


def half_width(top: int) -> int:
    """Largest odd L whose parabola point (L^2 - 1)/8 lies at or below top."""
    L = 1
    while ((L + 2) ** 2 - 1) // 8 <= top:
        L += 2
    return L


def render(circles: Iterable[Cell], dots: Iterable[Cell], top: int) -> str:
    circles = set(circles)
    dots = set(dots) - circles
    L = half_width(top)
    cols = list(range(-L, L + 1, 2))
    label_w = len(f"m {top}")
    lines = []
    for m in range(top, -1, -1):
        label = f"m {m}" if m == top else str(m)
        cells = []
        for lam in cols:
            sym = OPEN if (m, lam) in circles else FILLED if (m, lam) in dots else ""
            cells.append(sym.rjust(CELL))
        lines.append((label.rjust(label_w) + "".join(cells)).rstrip())
    axis = " " * label_w + "".join(f"{c:+d}".rjust(CELL) for c in cols) + "  λ"
    lines.append(axis)
    return "\n".join(lines) + "\n"


def parse(text: str) -> Dict[Cell, str]:
    """Inverse of ``render``: the occupied cells and their symbols."""
    lines = text.rstrip("\n").split("\n")
    axis = lines[-1]
    label_w = len(axis) - len(axis.lstrip(" "))
    cols = [int(tok) for tok in axis.split()[:-1]]
    out: Dict[Cell, str] = {}
    for line in lines[:-1]:
        m = int(line[:label_w].split()[-1])
        body = line[label_w:]
        for k, lam in enumerate(cols):
            sym = body[k * CELL:(k + 1) * CELL].strip()
            if sym:
                out[(m, lam)] = sym
    return out


def figure_cells(rs_g: RootSystem, sub: RootData, top: int) -> Tuple[Set[Cell], Set[Cell]]:
    """(circles, all spin weights) for the trivial representation, through energy top."""
    lam = AffineWeight.make(0, [0] * rs_g.rank, 0)
    circles = _cells(e.mu for e in affine_multiplet(rs_g, sub, lam, top))
    plus, minus = affine_spin_character(rs_g, sub, top)
    return circles, series_support(plus) | series_support(minus)


def figure(rs_g: RootSystem, sub: RootData, top: int = 10) -> str:
    circles, spin = figure_cells(rs_g, sub, top)
    return render(circles, spin, top)


def kernel_figure(kernel: Iterable[AffineWeight], fock_weights: Iterable[AffineWeight], top: int) -> str:
    """Diagram from a computed Dirac kernel and the weights of a truncated Fock space."""
    return render(_cells(kernel), _cells(fock_weights), top)
