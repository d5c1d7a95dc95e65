"""Independent oracles for cross-checking the exact engine.

Deliberately primitive: dense Fraction matrices with textbook Gaussian
elimination, and dict-based Laurent polynomials.  Nothing here shares code
with the package's elimination or scalar arithmetic.
"""

from __future__ import annotations

from fractions import Fraction


def frac_rank(rows: list[list[Fraction]]) -> int:
    """Rank of a dense Fraction matrix by plain Gaussian elimination."""
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    col = 0
    while rank < len(rows) and col < ncols:
        piv = None
        for r in range(rank, len(rows)):
            if rows[r][col] != 0:
                piv = r
                break
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        lead = rows[rank][col]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / lead
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def specialize_op_rows(op, point) -> list[list[Fraction]]:
    """Dense Fraction matrix of a sparse operator at q = point (rows in label order)."""
    dom, cod = op.dom, op.cod
    mat = [[Fraction(0)] * dom.dim for _ in range(cod.dim)]
    for (r, c), v in op.entries.items():
        mat[cod.pos[r]][dom.pos[c]] = v.specialize(point)
    return mat


def flatten_ops_rows(ops, point) -> list[list[Fraction]]:
    """One dense row per operator: the flattened specialized matrix."""
    out = []
    for op in ops:
        dom, cod = op.dom, op.cod
        row = [Fraction(0)] * (dom.dim * cod.dim)
        for (r, c), v in op.entries.items():
            row[cod.pos[r] * dom.dim + dom.pos[c]] = v.specialize(point)
        out.append(row)
    return out


def vectors_rows(space, vecs, point) -> list[list[Fraction]]:
    out = []
    for vec in vecs:
        row = [Fraction(0)] * space.dim
        for lab, v in vec.items():
            row[space.pos[lab]] = v.specialize(point)
        out.append(row)
    return out


class Laurent:
    """Dict-based Laurent polynomials over Fraction, for q-identity oracles."""

    def __init__(self, coeffs: dict | None = None):
        self.c = {k: Fraction(v) for k, v in (coeffs or {}).items() if v}

    @staticmethod
    def q(power: int = 1) -> "Laurent":
        return Laurent({power: 1})

    @staticmethod
    def const(v) -> "Laurent":
        return Laurent({0: v})

    def __add__(self, other):
        out = dict(self.c)
        for k, v in other.c.items():
            out[k] = out.get(k, Fraction(0)) + v
        return Laurent(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, s):
        return Laurent({k: v * s for k, v in self.c.items()})

    def __mul__(self, other):
        out: dict = {}
        for k1, v1 in self.c.items():
            for k2, v2 in other.c.items():
                out[k1 + k2] = out.get(k1 + k2, Fraction(0)) + v1 * v2
        return Laurent(out)

    def __eq__(self, other):
        return self.c == other.c

    def __repr__(self):
        return f"Laurent({self.c})"


def laurent_of(rf) -> Laurent:
    """Convert a RatFunc with monomial denominator to a Laurent polynomial."""
    num, den = rf.num, rf.den
    nz = [k for k, c in enumerate(den) if c]
    assert len(nz) == 1, "denominator is not a monomial"
    shift, lead = nz[0], den[nz[0]]
    return Laurent({k - shift: Fraction(c, lead) for k, c in enumerate(num) if c})
