"""Writes the affine and linear groups over F_3 used as fixtures.

sg216_153.jsonl: ASL(2,3) = F_3^2 : SL(2,3) on the 9 vectors of F_3^2.
sl23.jsonl:      SL(2,3) on the 8 nonzero vectors of F_3^2.
"""
import json
import pathlib

HERE = pathlib.Path(__file__).parent
VECTORS = [(a, b) for b in range(3) for a in range(3)]
NONZERO = [v for v in VECTORS if v != (0, 0)]


def linear(m):
    return lambda v: ((m[0][0] * v[0] + m[0][1] * v[1]) % 3, (m[1][0] * v[0] + m[1][1] * v[1]) % 3)


def translation(t):
    return lambda v: ((v[0] + t[0]) % 3, (v[1] + t[1]) % 3)


def images(points, f):
    return [points.index(f(v)) + 1 for v in points]


def write(name, entry):
    (HERE / name).write_text(json.dumps(entry, separators=(",", ":")) + "\n")


upper = linear(((1, 1), (0, 1)))
rotate = linear(((0, 2), (1, 0)))
write("sg216_153.jsonl", {
    "id": "SG216_153",
    "degree": 9,
    "gens": [images(VECTORS, upper), images(VECTORS, rotate), images(VECTORS, translation((1, 0)))],
    "name": "ASL(2,3)",
})
write("sl23.jsonl", {
    "id": "SL2_3",
    "degree": 8,
    "gens": [images(NONZERO, upper), images(NONZERO, rotate)],
    "name": "SL(2,3)",
})
