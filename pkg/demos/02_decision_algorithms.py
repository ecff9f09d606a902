#!/usr/bin/env python3
"""Exact deciders side by side: subset brute force vs bounded search trees.

Uses a fixed 6-component instance. Both algorithms must agree on every
budget k; the search-tree route also exposes its per-axis feasible
selections, which is a good way to see why a budget fails.
Preprocessing (necessary / redundant components) is shown first since
both deciders can exploit it.
"""

import kfrechet as kf

P = kf.PolyCurve([[0.74, 0.052], [0.98, 0.241], [0.999, 0.091],
                  [0.274, 0.705], [0.114, 0.044], [0.899, 0.929]])
Q = kf.PolyCurve([[0.3, 0.618], [0.864, 0.026], [0.16, 0.021],
                  [0.916, 0.777], [0.364, 0.156]])
EPS = 0.359


def main():
    d = kf.build_diagram(P, Q, EPS)
    print(f"diagram: {d.n}x{d.m} cells, {len(d.components)} components, z = {d.z}\n")

    pre = kf.preprocess(d)
    print(f"preprocessing: necessary={list(pre.necessary)} "
          f"kept={list(pre.kept)} dropped={list(pre.dropped)}\n")

    for k in (1, 2, 3):
        brute = kf.decide_bruteforce(d, k)
        fpt = kf.decide_fpt(d, k)
        assert (brute is None) == (fpt is None)
        print(f"k = {k}: brute-force -> {brute}, search-tree -> {fpt}")
        for axis in ("p", "q"):
            sels, paths = kf.fpt_feasible_selections(d, axis, k)
            shown = ", ".join(str(list(s)) for s in sels[:4]) or "none"
            print(f"    axis {axis}: {paths} feasible path(s), selections: {shown}")
    print()

    sel = kf.decide_fpt(d, 2)
    print(f"witness for k = 2: {sel}")
    for cid in sel:
        c = d.components[cid]
        print(f"  component {cid}: P-span [{c.proj_p.lo:.3f}, {c.proj_p.hi:.3f}], "
              f"Q-span [{c.proj_q.lo:.3f}, {c.proj_q.hi:.3f}]")
    print(f"covers both axes: {kf.covers_both(d, sel)}")


if __name__ == "__main__":
    main()
