"""Build the rooms-and-corridors cube, minimise it and check the two room
formulas. Prints a timing line per stage."""
import argparse
import time

from polyslcs.bisim import minimize
from polyslcs.gen import rooms_cube
from polyslcs.geometry import build_cell_poset
from polyslcs.logic import parse, sat

PHI1 = "eta(green | eta(grey, white), white)"
PHI2 = f"eta(green | eta(grey, {PHI1}), {PHI1})"
KIND = {3: "white", 2: "R2", 1: "R3", 0: "R4"}   # grid coordinates equal to 1


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--method", default="ltsA", choices=["ltsA", "ltsC"])
    args = ap.parse_args()

    t = time.perf_counter()
    rc = rooms_cube(args.n)
    print("generate", f"{time.perf_counter() - t:.2f}s", rc.report())
    t = time.perf_counter()
    k = build_cell_poset(rc.model)
    print("cell poset", f"{time.perf_counter() - t:.2f}s", len(k.elements), "cells")
    t = time.perf_counter()
    p = minimize(k, args.method)
    print(args.method, f"{time.perf_counter() - t:.2f}s", len(p), "classes", sorted(map(len, p.blocks)))

    if args.n != 3:
        return
    kinds = {}
    for sid, room in rc.room_of.items():
        kinds.setdefault(KIND[sum(c == 1 for c in room)], set()).add(sid)
    for label, text in (("phi1", PHI1), ("phi2", PHI2)):
        s = sat(k, parse(text))
        row = {name: f"{len(cells & s)}/{len(cells)}" for name, cells in sorted(kinds.items())}
        print(label, row)


if __name__ == "__main__":
    main()
