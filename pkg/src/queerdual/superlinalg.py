"""Z2-graded linear algebra over the rational-function field.

Spaces carry a labeled, parity-tagged basis (labels are words: tuples of nonzero
indices, or opaque strings for fixture modules).  Operators are parity-homogeneous
sparse matrices.  Tensor products follow the Koszul sign rule

    (A (x) B)(u (x) w) = (-1)^{|B||u|} A(u) (x) B(w).

All eliminations are exact; pivot rows are chosen by minimal polynomial degree
then label order, so every result is deterministic for a fixed basis order.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

from .scalars import ONE, ZERO, RatFunc


def index_parity(i: int) -> int:
    """Parity of a basis index: even for positive, odd for negative."""
    if i == 0:
        raise ValueError("0 is not a basis index")
    return 0 if i > 0 else 1


def index_range(n: int) -> list[int]:
    """The index set {-n..-1, 1..n} in its total order."""
    return list(range(-n, 0)) + list(range(1, n + 1))


def word_parity(word) -> int:
    return sum(index_parity(i) for i in word) & 1


class SuperSpace:
    """A finite graded space with an ordered, parity-tagged basis."""

    __slots__ = ("labels", "parity", "pos")

    def __init__(self, labels: Sequence, parity: dict):
        self.labels = tuple(labels)
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("duplicate basis labels")
        self.parity = dict(parity)
        self.pos = {lab: k for k, lab in enumerate(self.labels)}

    @staticmethod
    def standard(n: int) -> "SuperSpace":
        """The vector superspace with basis v_i, i in {-n..-1, 1..n}; labels are 1-letter words."""
        labels = [(i,) for i in index_range(n)]
        return SuperSpace(labels, {lab: index_parity(lab[0]) for lab in labels})

    @staticmethod
    def named(labels: Sequence[str], odd: Iterable[str]) -> "SuperSpace":
        odd = set(odd)
        return SuperSpace(labels, {lab: 1 if lab in odd else 0 for lab in labels})

    @property
    def dim(self) -> int:
        return len(self.labels)

    def even_odd_dims(self) -> tuple[int, int]:
        odd = sum(self.parity.values())
        return len(self.labels) - odd, odd

    def __eq__(self, other):
        return (
            isinstance(other, SuperSpace)
            and self.labels == other.labels
            and self.parity == other.parity
        )

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return f"SuperSpace(dim={self.dim})"


def tensor_space(V: SuperSpace, m: int) -> SuperSpace:
    """Word basis of length-m label tuples; parity is additive."""
    if m < 1:
        raise ValueError("m >= 1 required")
    out = V
    for _ in range(m - 1):
        out = tensor_pair(out, V)
    return out


def tensor_pair(V: SuperSpace, W: SuperSpace) -> SuperSpace:
    labels = []
    parity = {}
    for a in V.labels:
        pa = V.parity[a]
        for b in W.labels:
            lab = a + b
            labels.append(lab)
            parity[lab] = (pa + W.parity[b]) & 1
    return SuperSpace(labels, parity)


class SOp:
    """A parity-homogeneous sparse operator between graded spaces."""

    __slots__ = ("dom", "cod", "par", "entries", "_by_col")

    def __init__(self, dom: SuperSpace, cod: SuperSpace, par: int, entries: dict, validate: bool = True):
        self.dom = dom
        self.cod = cod
        self.par = par & 1
        self.entries = {k: v for k, v in entries.items() if not v.is_zero()}
        self._by_col = None
        if validate:
            dp, cp = dom.parity, cod.parity
            for (r, c) in self.entries:
                if (cp[r] + dp[c]) & 1 != self.par:
                    raise ValueError(f"entry ({r!r},{c!r}) violates operator parity {self.par}")

    # -- constructors --------------------------------------------------------

    @staticmethod
    def identity(V: SuperSpace) -> "SOp":
        return SOp(V, V, 0, {(lab, lab): ONE for lab in V.labels}, validate=False)

    @staticmethod
    def zero(dom: SuperSpace, cod: SuperSpace | None = None, par: int = 0) -> "SOp":
        return SOp(dom, cod if cod is not None else dom, par, {}, validate=False)

    @staticmethod
    def unit(dom: SuperSpace, cod: SuperSpace, r, c, value: RatFunc = ONE) -> "SOp":
        """The matrix unit E_{rc} (scaled); parity inferred from the labels."""
        par = (cod.parity[r] + dom.parity[c]) & 1
        return SOp(dom, cod, par, {(r, c): value}, validate=False)

    # -- algebra ---------------------------------------------------------------

    def __add__(self, other: "SOp") -> "SOp":
        if (self.dom is not other.dom and self.dom != other.dom) or (
            self.cod is not other.cod and self.cod != other.cod
        ):
            raise ValueError("shape mismatch")
        if self.par != other.par and self.entries and other.entries:
            raise ValueError("cannot add operators of different parity")
        out = dict(self.entries)
        for k, v in other.entries.items():
            s = out.get(k)
            w = v if s is None else s + v
            if w.is_zero():
                out.pop(k, None)
            else:
                out[k] = w
        par = self.par if self.entries else other.par
        return SOp(self.dom, self.cod, par, out, validate=False)

    def __sub__(self, other: "SOp") -> "SOp":
        return self + (-other)

    def __neg__(self) -> "SOp":
        return SOp(self.dom, self.cod, self.par, {k: -v for k, v in self.entries.items()}, validate=False)

    def scale(self, s) -> "SOp":
        if isinstance(s, int):
            s = RatFunc(s)
        if s.is_zero():
            return SOp.zero(self.dom, self.cod, self.par)
        return SOp(self.dom, self.cod, self.par, {k: s * v for k, v in self.entries.items()}, validate=False)

    def __rmul__(self, s):
        return self.scale(s)

    def _cols(self):
        if self._by_col is None:
            by = {}
            for (r, c), v in self.entries.items():
                by.setdefault(c, []).append((r, v))
            self._by_col = by
        return self._by_col

    def __matmul__(self, other: "SOp") -> "SOp":
        """Composition self after other (plain operator product, no signs)."""
        if other.cod != self.dom:
            raise ValueError("composition shape mismatch")
        a_cols = self._cols()
        acc: dict = {}
        for (k, c), bv in other.entries.items():
            hits = a_cols.get(k)
            if not hits:
                continue
            for r, av in hits:
                key = (r, c)
                s = acc.get(key)
                w = av * bv if s is None else s + av * bv
                acc[key] = w
        return SOp(other.dom, self.cod, self.par + other.par, acc, validate=False)

    def power(self, k: int) -> "SOp":
        if self.dom != self.cod:
            raise ValueError("power of a non-endomorphism")
        out = SOp.identity(self.dom)
        for _ in range(k):
            out = self @ out
        return out

    def apply(self, vec: dict) -> dict:
        """Matrix-vector application; vec maps domain labels to scalars."""
        out: dict = {}
        for (r, c), v in self.entries.items():
            x = vec.get(c)
            if x is None:
                continue
            s = out.get(r)
            w = v * x if s is None else s + v * x
            out[r] = w
        return {k: v for k, v in out.items() if not v.is_zero()}

    # -- structure ----------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        return (
            isinstance(other, SOp)
            and self.dom == other.dom
            and self.cod == other.cod
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"SOp({self.cod.dim}x{self.dom.dim}, parity={self.par}, nnz={len(self.entries)})"

    def entry(self, r, c) -> RatFunc:
        return self.entries.get((r, c), ZERO)

    def restrict(self, labels: Sequence, space: SuperSpace | None = None) -> "SOp":
        """Restriction of an endomorphism to the span of a label subset (must be invariant)."""
        keep = set(labels)
        sub = space or SuperSpace(list(labels), {lab: self.dom.parity[lab] for lab in labels})
        out = {}
        for (r, c), v in self.entries.items():
            if c in keep:
                if r not in keep:
                    raise ValueError(f"subspace not invariant: leaks to {r!r}")
                out[(r, c)] = v
        return SOp(sub, sub, self.par, out, validate=False)

    def subs_qinv(self) -> "SOp":
        return SOp(
            self.dom, self.cod, self.par,
            {k: v.subs_qinv() for k, v in self.entries.items()}, validate=False,
        )

    def specialize(self, c) -> "SOp":
        """Entrywise specialization at q = c, embedded back as constant scalars."""
        from fractions import Fraction

        out = {}
        for k, v in self.entries.items():
            out[k] = RatFunc.from_fraction(v.specialize(Fraction(c)))
        return SOp(self.dom, self.cod, self.par, out, validate=False)


def graded_tensor(A: SOp, B: SOp) -> SOp:
    """Koszul-signed tensor product of operators on word-labeled spaces."""
    dom = tensor_pair(A.dom, B.dom)
    cod = tensor_pair(A.cod, B.cod)
    sign_flip = B.par == 1
    dparity = A.dom.parity
    out = {}
    for (ra, ca), va in A.entries.items():
        for (rb, cb), vb in B.entries.items():
            v = va * vb
            if sign_flip and dparity[ca]:
                v = -v
            out[(ra + rb, ca + cb)] = v
    return SOp(dom, cod, A.par + B.par, out, validate=False)


def supercommutator(A: SOp, B: SOp) -> SOp:
    """A B - (-1)^{|A||B|} B A."""
    ab = A @ B
    ba = B @ A
    if A.par and B.par:
        return ab + ba
    return ab - ba


# ---------------------------------------------------------------------------
# exact elimination
# ---------------------------------------------------------------------------

class Echelon:
    """Incremental reduced echelon basis of sparse vectors over integer keys.

    Rows are kept fully reduced with pivot coefficient 1.  With ``track=True``
    each row remembers its expression in the inserted vectors, so membership
    queries can return coordinates.
    """

    def __init__(self, track: bool = False):
        self.rows: list[tuple[int, dict]] = []
        self.track = track
        self.combos: list[dict] = []
        self.n_inserted = 0

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _reduce(self, vec: dict, combo: dict | None):
        vec = dict(vec)
        for idx, (pivot, row) in enumerate(self.rows):
            c = vec.get(pivot)
            if c is None or c.is_zero():
                continue
            for k, v in row.items():
                s = vec.get(k)
                w = -c * v if s is None else s - c * v
                if w.is_zero():
                    vec.pop(k, None)
                else:
                    vec[k] = w
            if combo is not None:
                for j, v in self.combos[idx].items():
                    combo[j] = combo.get(j, ZERO) - c * v
        return {k: v for k, v in vec.items() if not v.is_zero()}, combo

    def reduce(self, vec: dict):
        """Residual of vec modulo the span, and its coordinates over inserted vectors."""
        combo: dict | None = {} if self.track else None
        res, combo = self._reduce(vec, combo)
        return res, combo

    def insert(self, vec: dict) -> bool:
        """Insert a vector; returns True when it enlarged the span."""
        combo: dict | None = {self.n_inserted: ONE} if self.track else None
        self.n_inserted += 1
        res, combo = self._reduce(vec, combo)
        if not res:
            return False
        pivot = min(res)
        inv = res[pivot].inverse()
        row = {k: inv * v for k, v in res.items()}
        if combo is not None:
            combo = {j: inv * v for j, v in combo.items() if not v.is_zero()}
        # back-substitute into existing rows to keep the reduced form
        for i, (p, r) in enumerate(self.rows):
            c = r.get(pivot)
            if c is None:
                continue
            for k, v in row.items():
                s = r.get(k)
                w = -c * v if s is None else s - c * v
                if w.is_zero():
                    r.pop(k, None)
                else:
                    r[k] = w
            if self.track:
                cc = self.combos[i]
                for j, v in combo.items():
                    w = cc.get(j, ZERO) - c * v
                    if w.is_zero():
                        cc.pop(j, None)
                    else:
                        cc[j] = w
        at = 0
        while at < len(self.rows) and self.rows[at][0] < pivot:
            at += 1
        self.rows.insert(at, (pivot, row))
        if self.track:
            self.combos.insert(at, combo)
        return True

    def contains(self, vec: dict) -> bool:
        res, _ = self._reduce(dict(vec), None)
        return not res


def rref(rows: list[dict]) -> list[tuple[int, dict]]:
    """Reduced row echelon form of sparse rows; pivot rows picked by minimal
    coefficient degree, ties broken by input order."""
    buckets: dict[int, list[dict]] = {}
    for r in rows:
        r = {k: v for k, v in r.items() if not v.is_zero()}
        if r:
            buckets.setdefault(min(r), []).append(r)
    done: list[tuple[int, dict]] = []
    while buckets:
        col = min(buckets)
        cands = buckets.pop(col)
        best = min(range(len(cands)), key=lambda i: cands[i][col].degree_size())
        pivot_row = cands.pop(best)
        inv = pivot_row[col].inverse()
        pivot_row = {k: inv * v for k, v in pivot_row.items()}
        for r in cands:
            c = r[col]
            for k, v in pivot_row.items():
                s = r.get(k)
                w = -c * v if s is None else s - c * v
                if w.is_zero():
                    r.pop(k, None)
                else:
                    r[k] = w
            if r:
                buckets.setdefault(min(r), []).append(r)
        done.append((col, pivot_row))
    # back substitution for the fully reduced form
    done.sort(key=lambda t: t[0])
    for i in range(len(done) - 1, -1, -1):
        col, row = done[i]
        for j in range(i):
            _, r = done[j]
            c = r.get(col)
            if c is None:
                continue
            for k, v in row.items():
                s = r.get(k)
                w = -c * v if s is None else s - c * v
                if w.is_zero():
                    r.pop(k, None)
                else:
                    r[k] = w
    return done


def kernel_basis(rows: list[dict], ncols: int) -> list[dict]:
    """Exact basis of the null space of the sparse constraint rows (columns 0..ncols-1)."""
    reduced = rref(rows)
    pivots = {col for col, _ in reduced}
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        vec = {free: ONE}
        for col, row in reduced:
            c = row.get(free)
            if c is not None and not c.is_zero():
                vec[col] = -c
        basis.append(vec)
    return basis


# ---------------------------------------------------------------------------
# spec operations
# ---------------------------------------------------------------------------

def _op_key(op: SOp):
    nd = op.dom.dim
    pos_d, pos_c = op.dom.pos, op.cod.pos
    return {pos_c[r] * nd + pos_d[c]: v for (r, c), v in op.entries.items()}


def flatten_vector(space: SuperSpace, vec: dict) -> dict:
    return {space.pos[lab]: v for lab, v in vec.items() if not v.is_zero()}


def unflatten_vector(space: SuperSpace, flat: dict) -> dict:
    return {space.labels[k]: v for k, v in flat.items()}


def joint_kernel(ops: list[SOp]) -> list[dict]:
    """Exact basis of the intersection of kernels, parity-homogeneous vectors.

    Deterministic for a fixed basis order; basis vectors are returned grouped by
    parity (even block first) following the domain label order.
    """
    if not ops:
        raise ValueError("need at least one operator")
    dom = ops[0].dom
    for op in ops[1:]:
        if op.dom != dom:
            raise ValueError("operators must share a domain")
    out = []
    for par in (0, 1):
        block = [lab for lab in dom.labels if dom.parity[lab] == par]
        if not block:
            continue
        colpos = {lab: i for i, lab in enumerate(block)}
        rows = []
        for op in ops:
            by_row: dict = {}
            for (r, c), v in op.entries.items():
                if c in colpos:
                    by_row.setdefault(r, {})[colpos[c]] = v
            rows.extend(by_row.values())
        for flat in kernel_basis(rows, len(block)):
            out.append({block[k]: v for k, v in flat.items()})
    return out


def span_dim(elems: Sequence, track: bool = False):
    """Exact rank and echelon basis of a family of operators or flat vectors."""
    ech = Echelon(track=track)
    kept = []
    for e in elems:
        flat = _op_key(e) if isinstance(e, SOp) else dict(e)
        if ech.insert(flat):
            kept.append(e)
    return ech.dim, ech, kept


def graded_commutant(ops: list[SOp]) -> list[SOp]:
    """Basis of all X with X a = (-1)^{|X||a|} a X for every a in ops, split by parity."""
    if not ops:
        raise ValueError("need at least one operator")
    space = ops[0].dom
    for op in ops:
        if op.dom != space or op.cod != space:
            raise ValueError("operators must be endomorphisms of one space")
    labels = space.labels
    par = space.parity
    out: list[SOp] = []
    for p in (0, 1):
        pairs = [(r, c) for r in labels for c in labels if (par[r] + par[c]) & 1 == p]
        vindex = {rc: i for i, rc in enumerate(pairs)}
        rows = []
        for a in ops:
            sign = -1 if (p and a.par) else 1
            by_rc: dict = {}
            # (X a)[r,c] = sum_k X[r,k] a[k,c]
            for (k, c), v in a.entries.items():
                for r in labels:
                    i = vindex.get((r, k))
                    if i is not None:
                        row = by_rc.setdefault((r, c), {})
                        row[i] = row.get(i, ZERO) + v
            # -(+-1) (a X)[r,c] = -(+-1) sum_k a[r,k] X[k,c]
            for (r, k), v in a.entries.items():
                for c in labels:
                    i = vindex.get((k, c))
                    if i is not None:
                        row = by_rc.setdefault((r, c), {})
                        row[i] = row.get(i, ZERO) + (v if sign < 0 else -v)
            rows.extend(
                {i: v for i, v in row.items() if not v.is_zero()}
                for row in by_rc.values()
            )
        for flat in kernel_basis(rows, len(pairs)):
            entries = {pairs[i]: v for i, v in flat.items()}
            out.append(SOp(space, space, p, entries, validate=False))
    return out


def operator_algebra_span(gens: list[SOp], include_identity: bool = True):
    """Echelon basis of the span of all words in the generators (left-multiplication
    closure, iterated to dimension stabilization)."""
    if not gens:
        raise ValueError("need at least one generator")
    space = gens[0].dom
    ech = Echelon()
    basis: list[SOp] = []
    frontier: list[SOp] = []
    seed = ([SOp.identity(space)] if include_identity else []) + list(gens)
    for op in seed:
        if ech.insert(_op_key(op)):
            basis.append(op)
            frontier.append(op)
    while frontier:
        new_frontier = []
        for g in gens:
            for b in frontier:
                cand = g @ b
                if cand.is_zero():
                    continue
                if ech.insert(_op_key(cand)):
                    basis.append(cand)
                    new_frontier.append(cand)
        frontier = new_frontier
    return ech, basis


# ---------------------------------------------------------------------------
# sparse operator cache format
# ---------------------------------------------------------------------------

def _label_json(lab):
    return list(lab) if isinstance(lab, tuple) else lab


def _label_from_json(lab):
    return tuple(lab) if isinstance(lab, list) else lab


def sop_to_cache(op: SOp) -> dict:
    entries = sorted(
        ((_label_json(r), _label_json(c), v.to_string()) for (r, c), v in op.entries.items()),
        key=lambda t: (json.dumps(t[0]), json.dumps(t[1])),
    )
    return {
        "domain": [_label_json(lab) for lab in op.dom.labels],
        "codomain": [_label_json(lab) for lab in op.cod.labels],
        "parity": op.par,
        "entries": [list(e) for e in entries],
    }


def sop_from_cache(d: dict) -> SOp:
    dom_labels = [_label_from_json(lab) for lab in d["domain"]]
    cod_labels = [_label_from_json(lab) for lab in d["codomain"]]
    dom = SuperSpace(dom_labels, {lab: word_parity(lab) for lab in dom_labels})
    cod = SuperSpace(cod_labels, {lab: word_parity(lab) for lab in cod_labels})
    entries = {
        (_label_from_json(r), _label_from_json(c)): RatFunc.from_string(s)
        for r, c, s in d["entries"]
    }
    return SOp(dom, cod, d["parity"], entries)


def cache_bytes(op: SOp) -> bytes:
    return json.dumps(sop_to_cache(op), separators=(",", ":"), sort_keys=True).encode()
