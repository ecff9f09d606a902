#!/usr/bin/env python3
"""Render free space diagrams to SVG files under demos/out/.

Three pictures: the opposite-order bumps at a budget-2 distance with the
witnessing selection outlined, the same pair once matching fails, and a
denser random pair where the component colors earn their keep.
"""

from pathlib import Path

import numpy as np

import kfrechet as kf

OUT = Path(__file__).parent / "out"


def render(path, P, Q, eps, select=None):
    d = kf.build_diagram(P, Q, eps)
    sel = kf.decide_fpt(d, select) if isinstance(select, int) else None
    text = kf.render_diagram_svg(d, P, Q, selected=sel)
    path.write_text(text)
    picked = f", selected {list(sel)}" if sel else ""
    print(f"  {path.name}: eps={eps}, {len(d.components)} components{picked}")


def main():
    OUT.mkdir(exist_ok=True)
    P = kf.PolyCurve([(0, 0), (0.5, 0.6), (1, 0), (2, 0), (2.5, 0.6), (3, 0)])
    Q = kf.PolyCurve([(2, 0.08), (2.5, 0.68), (3, 0.08), (1, 0.08), (0.5, 0.68), (0, 0.08)])
    print("writing SVGs:")
    render(OUT / "bumps_k2.svg", P, Q, 0.4, select=2)
    render(OUT / "bumps_uncoverable.svg", P, Q, 0.25)

    rng = np.random.default_rng(7)
    R = kf.PolyCurve(rng.uniform(0, 1, size=(7, 2)))
    S = kf.PolyCurve(rng.uniform(0, 1, size=(7, 2)))
    render(OUT / "random_pair.svg", R, S, 0.35)


if __name__ == "__main__":
    main()
