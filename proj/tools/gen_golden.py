#!/usr/bin/env python3
"""Regenerate data/golden/{z0,z1,z2,kset}.txt by brute force.

Membership is decided by enumerating every non-consecutive Lucas partition,
independently of the closed forms in the C++ library.
"""
import pathlib

COUNT = 100
LUCAS = [2, 1]
while len(LUCAS) < 40:
    LUCAS.append(LUCAS[-1] + LUCAS[-2])


def partitions(n):
    top = max(i for i, v in enumerate(LUCAS) if v <= n) if n >= 1 else -1
    out = []

    def walk(i, residual, chosen):
        if i < 0:
            if residual == 0:
                out.append(tuple(sorted(chosen)))
            return
        if LUCAS[i] <= residual:
            walk(i - 2, residual - LUCAS[i], chosen + [i])
        walk(i - 1, residual, chosen)

    walk(top, n, [])
    return out


def canonical(n):
    (only,) = [p for p in partitions(n) if not (0 in p and 2 in p)]
    return only


def first(predicate):
    values, n = [], 1
    while len(values) < COUNT:
        if predicate(n):
            values.append(n)
        n += 1
    return values


def main():
    root = pathlib.Path(__file__).resolve().parent.parent / "data" / "golden"
    root.mkdir(parents=True, exist_ok=True)
    for k in range(3):
        values = first(lambda n, k=k: k in canonical(n))
        (root / f"z{k}.txt").write_text("".join(f"{v}\n" for v in values))
    kset = first(lambda n: len(partitions(n)) == 2)
    (root / "kset.txt").write_text("".join(f"{v}\n" for v in kset))


if __name__ == "__main__":
    main()
