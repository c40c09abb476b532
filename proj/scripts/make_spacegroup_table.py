#!/usr/bin/env python3
"""Regenerate data/spacegroups.txt from scripts/spacegroup_settings.csv.

Each standard setting is stored as a Hall symbol (S.R. Hall, Acta Cryst. A37,
517-525, 1981); this script expands the symbol into the full coset of
symmetry operations and writes them in x,y,z triplet notation. The expansion
is validated against the known group order (point-group order times the
centering multiplicity) and the group axioms before anything is written.
"""
from fractions import Fraction
import csv
import os
import re
import sys

F = Fraction

ROT_Z = {
    1: [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    2: [[-1, 0, 0], [0, -1, 0], [0, 0, 1]],
    3: [[0, -1, 0], [1, -1, 0], [0, 0, 1]],
    4: [[0, -1, 0], [1, 0, 0], [0, 0, 1]],
    6: [[1, -1, 0], [1, 0, 0], [0, 0, 1]],
}
ROT_X = {
    1: [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    2: [[1, 0, 0], [0, -1, 0], [0, 0, -1]],
    3: [[1, 0, 0], [0, 0, -1], [0, 1, -1]],
    4: [[1, 0, 0], [0, 0, -1], [0, 1, 0]],
    6: [[1, 0, 0], [0, 1, -1], [0, 1, 0]],
}
ROT_Y = {
    1: [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    2: [[-1, 0, 0], [0, 1, 0], [0, 0, -1]],
    3: [[-1, 0, 1], [0, 1, 0], [-1, 0, 0]],
    4: [[0, 0, 1], [0, 1, 0], [-1, 0, 0]],
    6: [[0, 0, 1], [0, 1, 0], [-1, 0, 1]],
}
ROT = {"x": ROT_X, "y": ROT_Y, "z": ROT_Z}

# two-fold axes along face diagonals, keyed by (preceding principal axis, kind)
DIAG2 = {
    ("z", "'"): [[0, -1, 0], [-1, 0, 0], [0, 0, -1]],
    ("z", '"'): [[0, 1, 0], [1, 0, 0], [0, 0, -1]],
    ("x", "'"): [[-1, 0, 0], [0, 0, -1], [0, -1, 0]],
    ("x", '"'): [[-1, 0, 0], [0, 0, 1], [0, 1, 0]],
    ("y", "'"): [[0, 0, -1], [0, -1, 0], [-1, 0, 0]],
    ("y", '"'): [[0, 0, 1], [0, -1, 0], [1, 0, 0]],
}
ROT_3STAR = [[0, 0, 1], [1, 0, 0], [0, 1, 0]]  # 3-fold about [111]

AXIS_VEC = {"x": (1, 0, 0), "y": (0, 1, 0), "z": (0, 0, 1)}

TRANSL = {
    "a": (F(1, 2), F(0), F(0)),
    "b": (F(0), F(1, 2), F(0)),
    "c": (F(0), F(0), F(1, 2)),
    "n": (F(1, 2), F(1, 2), F(1, 2)),
    "u": (F(1, 4), F(0), F(0)),
    "v": (F(0), F(1, 4), F(0)),
    "w": (F(0), F(0), F(1, 4)),
    "d": (F(1, 4), F(1, 4), F(1, 4)),
}

LATTICE_TR = {
    "P": [(F(0), F(0), F(0))],
    "A": [(F(0), F(0), F(0)), (F(0), F(1, 2), F(1, 2))],
    "B": [(F(0), F(0), F(0)), (F(1, 2), F(0), F(1, 2))],
    "C": [(F(0), F(0), F(0)), (F(1, 2), F(1, 2), F(0))],
    "I": [(F(0), F(0), F(0)), (F(1, 2), F(1, 2), F(1, 2))],
    "R": [(F(0), F(0), F(0)), (F(2, 3), F(1, 3), F(1, 3)), (F(1, 3), F(2, 3), F(2, 3))],
    "F": [(F(0), F(0), F(0)), (F(0), F(1, 2), F(1, 2)),
          (F(1, 2), F(0), F(1, 2)), (F(1, 2), F(1, 2), F(0))],
}

PG_ORDER = {
    "C1": 1, "Ci": 2, "C2": 2, "Cs": 2, "C2h": 4, "D2": 4, "C2v": 4, "D2h": 8,
    "C4": 4, "S4": 4, "C4h": 8, "D4": 8, "C4v": 8, "D2d": 8, "D4h": 16,
    "C3": 3, "C3i": 6, "D3": 6, "C3v": 6, "D3d": 12,
    "C6": 6, "C3h": 6, "C6h": 12, "D6": 12, "C6v": 12, "D3h": 12, "D6h": 24,
    "T": 12, "Th": 24, "O": 24, "Td": 24, "Oh": 48,
}


def mat_mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)] for i in range(3)]


def mat_vec(a, v):
    return tuple(sum(a[i][k] * v[k] for k in range(3)) for i in range(3))


def vec_add(u, v):
    return tuple(u[i] + v[i] for i in range(3))


def wrap(v):
    return tuple(x - (x.numerator // x.denominator) for x in v)


class Seitz:
    __slots__ = ("r", "t")

    def __init__(self, r, t):
        self.r = tuple(tuple(row) for row in r)
        self.t = wrap(tuple(F(x) for x in t))

    def compose(self, other):
        return Seitz(mat_mul(self.r, other.r),
                     vec_add(mat_vec(self.r, other.t), self.t))

    def key(self):
        return (self.r, self.t)


IDENTITY = Seitz([[1, 0, 0], [0, 1, 0], [0, 0, 1]], (0, 0, 0))


def parse_term(term, pos, prev_n, prev_axis):
    improper = term.startswith("-")
    if improper:
        term = term[1:]
    n = int(term[0])
    rest = term[1:]

    axis = None
    subscript = 0
    trans = (F(0), F(0), F(0))
    for ch in rest:
        if ch in "xyz":
            axis = ch
        elif ch in ("'", '"', "*"):
            axis = ch
        elif ch in TRANSL:
            trans = vec_add(trans, TRANSL[ch])
        elif ch.isdigit():
            subscript = int(ch)
        else:
            raise ValueError(f"bad hall character {ch!r} in {term!r}")

    # implied-axis rules of the Hall notation
    if axis is None:
        if n == 1 or pos == 0:
            axis = "z"
        elif pos == 1:
            axis = ("x" if prev_n in (2, 4) else "'") if n == 2 else "x"
        elif pos == 2 and n == 3:
            axis = "*"
        else:
            axis = "z"

    if axis == "*":
        if n != 3:
            raise ValueError("only 3-fold body-diagonal axes are supported")
        rot = ROT_3STAR
        axis_vec = None
    elif axis in ("'", '"'):
        rot = DIAG2[(prev_axis or "z", axis)]
        axis_vec = None
    else:
        rot = ROT[axis][n]
        axis_vec = AXIS_VEC[axis]

    if subscript:
        if axis_vec is None:
            raise ValueError("screw subscript on a non-principal axis")
        trans = vec_add(trans, tuple(F(subscript, n) * F(x) for x in axis_vec))

    if improper:
        rot = [[-e for e in row] for row in rot]
    return Seitz(rot, trans), n, (axis if axis in "xyz" else (prev_axis or "z"))


def hall_to_ops(hall):
    hall = hall.strip()
    shift = (F(0), F(0), F(0))
    m = re.search(r"\(([ 0-9-]+)\)$", hall)
    if m:
        shift = tuple(F(int(p), 12) for p in m.group(1).split())
        hall = hall[:m.start()].strip()

    fields = hall.split()
    latt = fields[0]
    centrosym = latt.startswith("-")
    if centrosym:
        latt = latt[1:]

    gens = []
    prev_n, prev_axis = None, None
    for pos, term in enumerate(fields[1:]):
        op, prev_n, prev_axis = parse_term(term, pos, prev_n, prev_axis)
        gens.append(op)
    if centrosym:
        gens.append(Seitz([[-1, 0, 0], [0, -1, 0], [0, 0, -1]], (0, 0, 0)))
    for tr in LATTICE_TR[latt]:
        gens.append(Seitz([[1, 0, 0], [0, 1, 0], [0, 0, 1]], tr))

    if any(shift):
        gens = [Seitz(g.r, vec_add(vec_add(g.t, shift),
                                   tuple(-x for x in mat_vec(g.r, shift))))
                for g in gens]

    ops = {IDENTITY.key(): IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                c = g.compose(a)
                if c.key() not in ops:
                    ops[c.key()] = c
                    new.append(c)
        frontier = new
        if len(ops) > 400:
            raise RuntimeError("runaway group expansion: " + hall)
    return list(ops.values()), latt


def op_to_xyz(op):
    out = []
    for i in range(3):
        s = ""
        for j, name in enumerate("xyz"):
            c = op.r[i][j]
            if c == 1:
                s += ("+" if s else "") + name
            elif c == -1:
                s += "-" + name
            elif c != 0:
                raise ValueError("rotation entry outside {-1,0,1}")
        t = op.t[i]
        if t != 0:
            s += ("+" if t > 0 else "") + f"{t.numerator}/{t.denominator}"
        out.append(s or "0")
    return ",".join(out)


def main():
    here = os.path.dirname(os.path.abspath(__file__))
    settings_path = os.path.join(here, "spacegroup_settings.csv")
    out_path = os.path.join(here, os.pardir, "data", "spacegroups.txt")

    lines = [
        "# Space-group symmetry operations, one block per group:",
        "#   #SG <number> <hm_symbol> <op_count>",
        "# followed by op_count lines in x,y,z triplet notation, blank-line separated.",
        "# Standard settings (unique axis b, origin choice 2, hexagonal axes for",
        "# rhombohedral groups), expanded from the Hall notation of the corresponding",
        "# settings in the International Tables / spglib convention.",
        "",
    ]
    with open(settings_path, newline="") as f:
        rows = list(csv.DictReader(f))
    assert [int(r["number"]) for r in rows] == list(range(1, 231))

    for row in rows:
        num = int(row["number"])
        ops, latt = hall_to_ops(row["hall"])
        pg = row["schoenflies"].split("^")[0]
        expect = PG_ORDER[pg] * len(LATTICE_TR[latt])
        assert len(ops) == expect, (num, row["hall"], len(ops), expect)
        keys = {o.key() for o in ops}
        assert IDENTITY.key() in keys
        for a in ops:
            assert any(a.compose(b).key() == IDENTITY.key() for b in ops), (num, "missing inverse")
            for b in ops:
                assert a.compose(b).key() in keys, (num, "not closed")
            for t in a.t:
                assert t.denominator in (1, 2, 3, 4, 6), (num, a.t)

        strs = sorted(op_to_xyz(o) for o in ops)
        strs.remove("x,y,z")
        strs.insert(0, "x,y,z")
        lines.append(f"#SG {num} {row['hm_short']} {len(ops)}")
        lines.extend(strs)
        lines.append("")

    with open(out_path, "w") as f:
        f.write("\n".join(lines))
    print(f"wrote {out_path}: {sum(1 for l in lines if l and not l.startswith('#SG') and l != '')} lines")


if __name__ == "__main__":
    sys.exit(main())
