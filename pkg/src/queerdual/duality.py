"""Verification engine for the two dualities.

Provides the strict-partition combinatorics, isotypic censuses of tensor powers
(highest weight vectors, generated submodules, endomorphism-type detection),
the mutual-centralizer check between the queer and Hecke-Clifford actions, the
graded-dimension census of the coordinate superalgebra against the
multiplicity-free prediction, the eight-dimensional rank-2 fixture module with
its braid eigenvalues, and the classical (q = 1) cross-checks.

Machine-derived regression values (commutant dimensions, graded dimensions,
census tables) are frozen in expected_values.json next to this module; every
suite emits the values it derived so the file can be regenerated in one
command.  Nothing in the expectations file is hand-asserted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from .report import VerifyReport
from .scalars import ONE, QINV, RatFunc, Q, ZERO
from .superlinalg import (
    Echelon,
    SOp,
    SuperSpace,
    flatten_vector,
    graded_commutant,
    operator_algebra_span,
    supercommutator,
)
from .uq_queer import (
    PARAM_Q,
    QueerRep,
    chevalley_ops,
    classical_limit,
    generate_submodule,
    highest_weight_vectors,
    is_dominant_weight,
    tensor_rep,
    vector_rep,
    weight_spaces,
)
from .hecke_clifford import HCAction, HCSpec, braid_operator, hc_check, hc_tensor_action, zero_weight_hc


def enumerate_strict_partitions(size: int, max_len: int) -> list[tuple]:
    """All strict partitions of `size` with at most max_len parts, lex-sorted."""
    if size < 0:
        raise ValueError("size >= 0 required")
    out: list[tuple] = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if len(prefix) == max_len:
            return
        hi = min(remaining, cap)
        for part in range(hi, 0, -1):
            rec(remaining - part, part - 1, prefix + [part])

    rec(size, size, [])
    return sorted(out)


def pad_weight(lam: tuple, n: int) -> tuple:
    return tuple(lam) + (0,) * (n - len(lam))


# ---------------------------------------------------------------------------
# submodule restriction
# ---------------------------------------------------------------------------

class SubmoduleRep:
    """A representation restricted to an invariant subspace given by basis vectors."""

    def __init__(self, rep: QueerRep, basis: list[dict], label_prefix: str = "s"):
        self.parent = rep
        self.basis = basis
        labels = [f"{label_prefix}{k}" for k in range(len(basis))]
        parities = {}
        for lab, vec in zip(labels, basis):
            ps = {rep.space.parity[x] for x in vec}
            if len(ps) != 1:
                raise ValueError("submodule basis vector is not parity-homogeneous")
            parities[lab] = ps.pop()
        self.space = SuperSpace(labels, parities)
        self._ech = Echelon(track=True)
        for vec in basis:
            if not self._ech.insert(flatten_vector(rep.space, vec)):
                raise ValueError("submodule basis is dependent")

    def coordinates(self, vec: dict) -> dict:
        res, combo = self._ech.reduce(flatten_vector(self.parent.space, vec))
        if res:
            raise ValueError("vector leaves the submodule")
        return {self.space.labels[j]: -c for j, c in combo.items() if not c.is_zero()}

    def restrict(self, op: SOp) -> SOp:
        entries = {}
        for k, vec in enumerate(self.basis):
            img = op.apply(vec)
            if not img:
                continue
            col = self.space.labels[k]
            for row, c in self.coordinates(img).items():
                entries[(row, col)] = c
        return SOp(self.space, self.space, op.par, entries, validate=False)

    def as_queer_rep(self) -> QueerRep:
        gen = {key: self.restrict(op) for key, op in self.parent.gen.items()}
        return QueerRep(self.parent.spec, self.space, gen)


# ---------------------------------------------------------------------------
# isotypic census
# ---------------------------------------------------------------------------

@dataclass
class CensusEntry:
    hwv_dim: int
    submodule_dim: int
    hwv_in_submodule: int
    copies: int
    endo_even: int
    endo_odd: int
    odd_square_is_minus_square: bool | None
    predicted_type: str
    detected_type: str
    paired: bool = False  # generated block is an irreducible pair over the base field
    irreducible_dim: int = 0  # dimension of one irreducible over the closed-field theory


@dataclass
class IsotypicCensus:
    n: int
    m: int
    entries: dict = field(default_factory=dict)  # padded weight -> CensusEntry
    total_dim: int = 0
    closes: bool = False

    def summary(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "closes": self.closes,
            "total_dim": self.total_dim,
            "blocks": {
                str(list(lam)): {
                    "hwv_dim": e.hwv_dim,
                    "submodule_dim": e.submodule_dim,
                    "irreducible_dim": e.irreducible_dim,
                    "copies": e.copies,
                    "type": e.detected_type,
                    "paired": e.paired,
                }
                for lam, e in self.entries.items()
            },
        }


def _pick_seed(vectors: list[dict], space: SuperSpace) -> dict:
    for v in vectors:
        ps = {space.parity[x] for x in v}
        if ps == {0}:
            return v
    return vectors[0]


def isotypic_census(n: int, m: int, rep: QueerRep | None = None):
    """HWV extraction, submodule generation, and type detection for V^{(x)m}."""
    report = VerifyReport("census", {"n": n, "m": m})
    if rep is None:
        rep = tensor_rep(vector_rep(n, PARAM_Q), m)
    census = IsotypicCensus(n, m)
    blocks = weight_spaces(rep)
    nonempty = {}
    for mu in sorted(blocks, reverse=True):
        hw = highest_weight_vectors(rep, mu)
        if hw:
            nonempty[mu] = hw
    expected = {pad_weight(lam, n) for lam in enumerate_strict_partitions(m, n)}
    report.add(
        "hwv_weights_are_strict_partitions",
        set(nonempty) == expected,
        witness=None if set(nonempty) == expected else {
            "got": sorted(map(list, nonempty)), "expected": sorted(map(list, expected))},
    )
    report.add(
        "hwv_weights_dominant",
        all(is_dominant_weight(mu) for mu in nonempty),
    )
    total = 0
    for mu, hw in sorted(nonempty.items(), reverse=True):
        seed = _pick_seed(hw, rep.space)
        sub_basis = generate_submodule(rep, [seed])
        sub = SubmoduleRep(rep, sub_basis)
        sub_rep = sub.as_queer_rep()
        sub_hw = highest_weight_vectors(sub_rep, mu)
        h, d, h_sub = len(hw), len(sub_basis), len(sub_hw)
        copies_ok = h_sub > 0 and h % h_sub == 0
        copies = h // h_sub if copies_ok else 0
        comm = graded_commutant(list(sub_rep.gen.values()))
        even = sum(1 for X in comm if X.par == 0)
        odd = sum(1 for X in comm if X.par == 1)
        odd_sq = None
        if odd == 1 and even == 1:
            # type Q: the odd endomorphism squares to a scalar c; over the base
            # field -c need not be a perfect square (the normalized odd
            # involution lives over a quadratic extension), so record it
            X = next(X for X in comm if X.par == 1)
            sq = X @ X
            diag = sq.entry(sub_rep.space.labels[0], sub_rep.space.labels[0])
            scalar_ok = sq == SOp.identity(sub_rep.space).scale(diag)
            odd_sq = bool(scalar_ok and (-diag).sqrt() is not None) if scalar_ok else None
        if even == 1 and odd == 0:
            detected, paired, irr = "M", False, d
        elif even == 1 and odd == 1:
            detected, paired, irr = "Q", False, d
        elif even == 2 and odd == 2 and d % 2 == 0:
            # the generated block is the inseparable pair of the two type-M
            # halves (the closed-field irreducible is not defined over Q(q))
            detected, paired, irr = "M", True, d // 2
        else:
            detected, paired, irr = "?", False, d
        ell = sum(1 for x in mu if x)
        predicted = "M" if ell % 2 == 0 else "Q"
        census.entries[mu] = CensusEntry(
            h, d, h_sub, copies, even, odd, odd_sq, predicted, detected, paired, irr
        )
        report.add(f"copies_integral[{','.join(map(str, mu))}]", copies_ok)
        report.add(
            f"type[{','.join(map(str, mu))}]",
            predicted == detected,
            value={
                "predicted": predicted,
                "detected": detected,
                "paired_over_base_field": paired,
                "odd_square_is_minus_square": odd_sq,
            },
        )
        total += d * copies
    census.total_dim = total
    census.closes = total == (2 * n) ** m
    report.add("census_closes", census.closes, value={"sum": total, "space": (2 * n) ** m})
    report.derive("census", census.summary())
    return census, report.finish()


# ---------------------------------------------------------------------------
# Sergeev-Olshanski duality
# ---------------------------------------------------------------------------

def sergeev_verify(n: int, m: int, mode: str = "exact", centralizer: bool = True) -> VerifyReport:
    """Mutual-centralizer check on V^{(x)m}: supercommutation, span of the
    Hecke-Clifford words against the graded commutant of the queer image (both
    inclusions), the bicommutant sanity check, and census consistency.

    Probabilistic mode speeds up the supercommutation stage by specializing all
    operators at seed-chosen rational points; the span and commutant dimensions
    are always computed exactly.  ``centralizer=False`` skips the commutant
    solves (they scale with dim^4 and are reserved for the small configurations).
    """
    report = VerifyReport("sergeev", {"n": n, "m": m, "mode": mode, "centralizer": centralizer})
    rep = tensor_rep(vector_rep(n, PARAM_Q), m)
    hc = hc_tensor_action(n, m, PARAM_Q)
    ch = rep.chevalley()

    queer_gens = list(rep.gen.values())
    hc_gens = hc.generators()

    if mode in ("prob", "probabilistic"):
        import random as _random
        from fractions import Fraction

        rng = _random.Random(0)
        c = Fraction(rng.randint(2, 10**4), rng.randint(1, 100))
        pairs = [(x.specialize(c), h.specialize(c)) for x in ch.values() for h in hc_gens]
    else:
        pairs = [(x, h) for x in ch.values() for h in hc_gens]
    ok = True
    witness = None
    for x, h in pairs:
        d = supercommutator(x, h)
        if not d.is_zero():
            ok = False
            witness = repr(next(iter(d.entries))[1])
            break
    report.add("supercommutation", ok, witness=witness)

    if centralizer:
        hc_ech, hc_basis = operator_algebra_span(hc_gens)
        comm = graded_commutant(queer_gens)
        report.derive("hc_image_dim", hc_ech.dim)
        report.derive("queer_commutant_dim", len(comm))
        report.add("hc_image_dim_equals_commutant", hc_ech.dim == len(comm))
        from .superlinalg import _op_key

        inside = all(hc_ech.contains(_op_key(X)) for X in comm)
        report.add("commutant_inside_hc_span", inside)
        cross = all(supercommutator(X, g).is_zero() for X in hc_basis for g in queer_gens)
        report.add("hc_span_supercommutes", cross)

        queer_ech, _ = operator_algebra_span(queer_gens)
        comm2 = graded_commutant(hc_gens)
        report.derive("queer_image_dim", queer_ech.dim)
        report.derive("hc_commutant_dim", len(comm2))
        report.add("queer_image_dim_equals_hc_commutant", queer_ech.dim == len(comm2))
        report.add("queer_image_inside_bicommutant", all(queer_ech.contains(_op_key(X)) for X in comm2))

    census, census_rep = isotypic_census(n, m, rep)
    report.extend(census_rep, prefix="census:")
    mults = [e.copies for e in census.entries.values()]
    report.derive("block_copies", mults)
    return report.finish()


# ---------------------------------------------------------------------------
# Howe duality census
# ---------------------------------------------------------------------------

def howe_verify(n: int, m: int, l_max: int) -> VerifyReport:
    """Graded-dimension census of the coordinate superalgebra of the (n, m) pair:
    for each degree l <= l_max the exact monomial rank must equal

        sum over strict partitions lam of l with len(lam) <= min(n, m) of
        dim L_n(lam) * dim L_m(lam) / 2^{[len(lam) odd]}

    with the irreducible dimensions read off submodule generation (never
    hardcoded).  Also verifies the fixed-subspace characterization: monomials
    with row letters in the rank-n range and column letters in the rank-m range
    are exactly the vectors fixed by the outer k_i of the ambient rank."""
    from .coord_alg import (
        CoordFunctional,
        act,
        functional_is_zero,
        gen_word,
        graded_component,
        normalized_monomials,
        operator_image_basis,
        phi_weight_exponents,
        psit_weight_exponents,
    )

    report = VerifyReport("howe", {"n": n, "m": m, "l_max": l_max})
    r = min(n, m)
    dims_by_degree = {}
    for l in range(0, l_max + 1):
        if l:
            comp = graded_component(n, m, l)
            comp_dim = comp.dim
            independent = [
                "".join(f"t[{a},{b}]" for a, b in zip(rows, cols)) for (rows, cols) in comp.basis
            ]
        else:
            comp_dim = 1
            independent = ["1"]
        if l == 0:
            predicted = 1
            parts = [()]
        else:
            predicted = 0
            parts = enumerate_strict_partitions(l, r)
            cen_n, _ = isotypic_census(n, l)
            cen_m, _ = isotypic_census(m, l)
            for lam in parts:
                ell = len(lam)
                dn = cen_n.entries[pad_weight(lam, n)].irreducible_dim
                dm = cen_m.entries[pad_weight(lam, m)].irreducible_dim
                term = dn * dm
                if ell % 2 == 1:
                    if term % 2:
                        report.add(f"halving_integral[l={l}]", False, value=term)
                    term //= 2
                predicted += term
        dims_by_degree[l] = {
            "n": n,
            "m": m,
            "l": l,
            "dim": comp_dim,
            "predicted": predicted,
            "partitions": list(map(list, parts)),
            "independent_monomials": independent,
        }
        report.add(f"graded_dim[l={l}]", comp_dim == predicted, value={"dim": comp_dim, "predicted": predicted})
    report.derive("dims_by_degree", dims_by_degree)

    s = max(n, m)
    if s > r:
        ok = True
        for l in range(1, min(l_max, 2) + 1):
            for (rows, cols) in normalized_monomials(n, m, l):
                psit_exp = psit_weight_exponents(rows, s)
                phi_exp = phi_weight_exponents(cols, s)
                if any(psit_exp[i - 1] for i in range(n + 1, s + 1)):
                    ok = False
                if any(phi_exp[j - 1] for j in range(m + 1, s + 1)):
                    ok = False
        report.add("fixed_subspace_exponents", ok)
        ib = operator_image_basis(s, 1)
        f = CoordFunctional.monomial((1,), (1,))
        sample_ok = True
        for i in range(n + 1, s + 1):
            if not functional_is_zero(act("psit", gen_word(i, i), f, s, s) - f, ib):
                sample_ok = False
        for j in range(m + 1, s + 1):
            if not functional_is_zero(act("phi", gen_word(j, j), f, s, s) - f, ib):
                sample_ok = False
        report.add("fixed_subspace_action_sample", sample_ok)
    return report.finish()


# ---------------------------------------------------------------------------
# the eight-dimensional rank-2 fixture
# ---------------------------------------------------------------------------

class FixtureModule:
    """The 8-dimensional rank-2 module with basis {u0,u1,u2,w,bu0,bu1,bu2,bw}
    and the transcribed Chevalley action table."""

    rank = 2
    param = PARAM_Q

    def __init__(self):
        labels = ["u0", "u1", "u2", "w", "bu0", "bu1", "bu2", "bw"]
        self.space = SuperSpace.named(labels, odd=["bu0", "bu1", "bu2", "bw"])
        self._chev = _fixture_table(self.space)

    def chevalley(self) -> dict:
        return self._chev

    def weight_blocks(self) -> dict:
        return {
            (2, 0): ["u0", "bu0"],
            (1, 1): ["u1", "bu1", "w", "bw"],
            (0, 2): ["u2", "bu2"],
        }

    @property
    def spec(self):
        from .uq_queer import AlgebraSpec

        return AlgebraSpec(self.rank, self.param)


def _fixture_table(space: SuperSpace) -> dict:
    two = Q + QINV          # [2]
    c22 = Q**2 + QINV**2    # q^2 + q^-2

    def op(par, cols: dict) -> SOp:
        entries = {}
        for src, images in cols.items():
            for dst, coeff in images:
                if isinstance(coeff, int):
                    coeff = RatFunc(coeff)
                if not coeff.is_zero():
                    entries[(dst, src)] = coeff
        return SOp(space, space, par, entries, validate=False)

    k1 = op(0, {
        "u0": [("u0", Q**2)], "u1": [("u1", Q)], "u2": [("u2", ONE)], "w": [("w", Q)],
        "bu0": [("bu0", Q**2)], "bu1": [("bu1", Q)], "bu2": [("bu2", ONE)], "bw": [("bw", Q)],
    })
    k2 = op(0, {
        "u0": [("u0", ONE)], "u1": [("u1", Q)], "u2": [("u2", Q**2)], "w": [("w", Q)],
        "bu0": [("bu0", ONE)], "bu1": [("bu1", Q)], "bu2": [("bu2", Q**2)], "bw": [("bw", Q)],
    })
    e1 = op(0, {
        "u1": [("u0", two)], "u2": [("u1", Q)],
        "bu1": [("bu0", two)], "bu2": [("bu1", Q)],
    })
    f1 = op(0, {
        "u0": [("u1", ONE)], "u1": [("u2", QINV * two)],
        "bu0": [("bu1", ONE)], "bu1": [("bu2", QINV * two)],
    })
    kbar1 = op(1, {
        "u0": [("bu0", ONE)],
        "bu0": [("u0", c22)],
        "u1": [("bu1", two.inverse()), ("bw", -(Q**2))],
        "bu1": [("u1", c22 / two), ("w", -(Q**2))],
        "w": [("bw", -(c22 / two)), ("bu1", -(2 * QINV**2 / (two * two)))],
        "bw": [("w", -(two.inverse())), ("u1", -(2 * QINV**2 / (two * two)))],
    })
    kbar2 = op(1, {
        "u1": [("bu1", two.inverse()), ("bw", ONE)],
        "bu1": [("u1", c22 / two), ("w", ONE)],
        "u2": [("bu2", ONE)],
        "bu2": [("u2", c22)],
        "w": [("bw", -(c22 / two)), ("bu1", 2 / (two * two))],
        "bw": [("w", -(two.inverse())), ("u1", 2 / (two * two))],
    })
    ebar1 = op(1, {
        "u1": [("bu0", ONE)],
        "bu1": [("u0", c22)],
        "u2": [("bu1", Q / two), ("bw", -(Q**3))],
        "bu2": [("u1", Q * c22 / two), ("w", -(Q**3))],
        "w": [("bu0", 2 / two)],
        "bw": [("u0", 2 / two)],
    })
    # the fbar.u0 coefficient on bw is +1, not the sometimes-printed -q^2: the
    # -q^2 variant fails to transport along the (unique) intertwiner to the
    # ambient tensor-square submodule, +1 transports exactly
    fbar1 = op(1, {
        "u0": [("bu1", two.inverse()), ("bw", ONE)],
        "bu0": [("u1", c22 / two), ("w", ONE)],
        "u1": [("bu2", QINV)],
        "bu1": [("u2", QINV * c22)],
        "w": [("bu2", -(2 * QINV**3 / two))],
        "bw": [("u2", -(2 * QINV**3 / two))],
    })
    kinv1 = op(0, {lab: [(lab, k1.entry(lab, lab).inverse())] for lab in space.labels})
    kinv2 = op(0, {lab: [(lab, k2.entry(lab, lab).inverse())] for lab in space.labels})
    return {
        ("k", 1): k1, ("k", 2): k2, ("kinv", 1): kinv1, ("kinv", 2): kinv2,
        ("kbar", 1): kbar1, ("kbar", 2): kbar2,
        ("e", 1): e1, ("f", 1): f1, ("ebar", 1): ebar1, ("fbar", 1): fbar1,
    }


def fixture_module():
    """Build the fixture and verify it embeds in V^{(x)2} (rank 2) via an exact
    even intertwiner; check the zero-weight braid eigenvalues and the
    zero-weight Hecke-Clifford structure."""
    report = VerifyReport("fixture", {})
    fix = FixtureModule()
    ch = fix.chevalley()

    blocks = fix.weight_blocks()
    weight_ok = True
    for mu, labs in blocks.items():
        for lab in labs:
            for i, name in ((1, ("k", 1)), (2, ("k", 2))):
                if ch[name].entry(lab, lab) != Q ** mu[i - 1]:
                    weight_ok = False
    report.add("weights_and_multiplicities", weight_ok, value={str(k): len(v) for k, v in blocks.items()})

    rep = tensor_rep(vector_rep(2, PARAM_Q), 2)
    sub = SubmoduleRep(rep, generate_submodule(rep, [{(1, 1): ONE}]))
    target_rep = sub.as_queer_rep()
    target_ch = chevalley_ops(target_rep)
    report.add("ambient_submodule_dim", sub.space.dim == 8, value=sub.space.dim)

    solve_on = [("k", 1), ("k", 2), ("e", 1), ("f", 1), ("ebar", 1)]
    fl, nl = fix.space.labels, target_rep.space.labels
    pairs = [(r, c) for r in nl for c in fl if target_rep.space.parity[r] == fix.space.parity[c]]
    vindex = {rc: i for i, rc in enumerate(pairs)}
    rows = []
    for name in solve_on:
        A, B = target_ch[name], ch[name]  # want Theta B = A Theta
        by_rc: dict = {}
        for (k, c), v in B.entries.items():
            for r in nl:
                i = vindex.get((r, k))
                if i is not None:
                    row = by_rc.setdefault((r, c), {})
                    row[i] = row.get(i, ZERO) + v
        for (r, k), v in A.entries.items():
            for c in fl:
                i = vindex.get((k, c))
                if i is not None:
                    row = by_rc.setdefault((r, c), {})
                    row[i] = row.get(i, ZERO) - v
        rows.extend({i: v for i, v in row.items() if not v.is_zero()} for row in by_rc.values())
    from .superlinalg import kernel_basis

    sols = kernel_basis(rows, len(pairs))
    report.derive("intertwiner_space_dim", len(sols))

    # normalize: Theta(u0) = the seed highest weight vector v1 (x) v1
    target_col = sub.coordinates({(1, 1): ONE})
    theta = None
    if sols:
        nrm_rows = []
        for r in nl:
            row = {}
            for a, sol in enumerate(sols):
                c = sol.get(vindex.get((r, "u0"), -1))
                if c is not None and not c.is_zero():
                    row[a] = c
            row[len(sols)] = -(target_col.get(r, ZERO))
            if row:
                nrm_rows.append(row)
        from .superlinalg import rref

        reduced = rref(nrm_rows)
        coeffs = {col: row.get(len(sols), ZERO) for col, row in reduced if col < len(sols)}
        if all(col < len(sols) for col, _ in reduced):
            entries = {}
            for a, sol in enumerate(sols):
                c = coeffs.get(a, ZERO)
                if c.is_zero():
                    continue
                for i, v in sol.items():
                    r, cc = pairs[i]
                    entries[(r, cc)] = entries.get((r, cc), ZERO) + c * v
            theta = SOp(fix.space, target_rep.space, 0, entries, validate=False)
    found = theta is not None and not theta.is_zero()
    inv_ok = False
    if found:
        mat_rows = []
        for r in nl:
            row = {fix.space.pos[c]: theta.entry(r, c) for c in fl if not theta.entry(r, c).is_zero()}
            if row:
                mat_rows.append(row)
        from .superlinalg import rref as _rref

        inv_ok = len(_rref(mat_rows)) == 8
    report.add("intertwiner_found", found)
    report.add("intertwiner_invertible", inv_ok)
    if found:
        for name in sorted(ch):
            ok = (theta @ ch[name]) == (target_ch[name] @ theta)
            report.add(f"transport[{name[0]}{name[1]}]", ok)
        report.derive(
            "table_correction",
            "fbar.u0 carries +1 on bw (a printed -q^2 variant does not transport)",
        )

    braid = braid_operator(fix, 1)
    for lab, val in (("u1", -Q), ("bu1", -Q), ("w", QINV), ("bw", QINV)):
        col = braid.apply({lab: ONE})
        ok = col == {lab: val}
        report.add(f"braid_eigenvalue[{lab}]", ok, value=str(val))

    zw = zero_weight_hc(fix)
    zw_res = hc_check(zw)
    report.add("zero_weight_hc_qinv", zw_res.ok)
    report.derive("zw_clifford_square", zw_res.derived_values.get("clifford_square"))
    q_side = hc_check(HCAction(HCSpec(zw.spec.m, PARAM_Q), zw.space, zw.t_ops, zw.c_ops))
    report.derive("zw_hc_q_param_passes", q_side.ok)
    return fix, report.finish()


# ---------------------------------------------------------------------------
# classical limit
# ---------------------------------------------------------------------------

def classical_crosscheck(n: int, m: int) -> VerifyReport:
    """Specialize the queer and Hecke-Clifford actions at q = 1 and re-check:
    the braid operators become signed graded swaps, the quadratic relation
    degenerates to (T-1)(T+1) = 0, supercommutation still vanishes exactly, the
    census dimensions are unchanged, and (k_i - 1)/(q - 1) acts by the content."""
    from .superlinalg import index_parity

    report = VerifyReport("classical", {"n": n, "m": m})
    rep = tensor_rep(vector_rep(n, PARAM_Q), m)
    cl = classical_limit(rep)
    hc = hc_tensor_action(n, m, PARAM_Q)
    W = rep.space

    swaps_ok = True
    for a in range(1, m):
        T1 = hc.t(a).specialize(1)
        entries = {}
        for w in W.labels:
            i, j = w[a - 1], w[a]
            swapped = w[: a - 1] + (j, i) + w[a + 1 :]
            s = -1 if (index_parity(i) and index_parity(j)) else 1
            entries[(swapped, w)] = RatFunc(s)
        if T1 != SOp(W, W, 0, entries, validate=False):
            swaps_ok = False
    report.add("braid_specializes_to_signed_swap", swaps_ok)

    ident = SOp.identity(W)
    hc1_ok = all(
        ((hc.t(a).specialize(1) - ident) @ (hc.t(a).specialize(1) + ident)).is_zero()
        for a in range(1, m)
    )
    report.add("hc1_degenerates", hc1_ok)

    cliff_ok = all(hc.c(b).specialize(1) == hc.c(b) for b in range(1, m + 1))
    report.add("clifford_constant", cliff_ok)

    hc_spec = [op.specialize(1) for op in hc.generators()]
    comm_ok = all(
        supercommutator(x, h).is_zero() for x in cl.values() for h in hc_spec
    )
    report.add("classical_supercommutation", comm_ok)

    # specialized relation suites: FRT relations at q = 1 ...
    from .uq_queer import _relation_sides, generator_pairs

    G1 = {key: op.specialize(1) for key, op in rep.gen.items()}
    rel_ok = True
    prod_cache: dict = {}
    for (i, j) in generator_pairs(n):
        for (k, l) in generator_pairs(n):
            lhs, rhs = _relation_sides(G1, i, j, k, l, ONE, RatFunc(0), prod_cache)
            if not (lhs - rhs).is_zero():
                rel_ok = False
    report.add("classical_defining_relations", rel_ok)
    # ... and the braid/Clifford families (hc1 degenerates, the rest verbatim)
    t_spec = [op.specialize(1) for op in hc.t_ops]
    c_spec = [op.specialize(1) for op in hc.c_ops]
    fam_ok = True
    for a in range(m - 1):
        for b in range(m - 1):
            if abs(a - b) > 1:
                fam_ok = fam_ok and (t_spec[a] @ t_spec[b] - t_spec[b] @ t_spec[a]).is_zero()
        if a + 1 < m - 1:
            fam_ok = fam_ok and (
                t_spec[a] @ t_spec[a + 1] @ t_spec[a] - t_spec[a + 1] @ t_spec[a] @ t_spec[a + 1]
            ).is_zero()
    for b in range(m):
        fam_ok = fam_ok and (c_spec[b] @ c_spec[b] + ident).is_zero()
        for b2 in range(b + 1, m):
            fam_ok = fam_ok and (c_spec[b] @ c_spec[b2] + c_spec[b2] @ c_spec[b]).is_zero()
    for a in range(m - 1):
        fam_ok = fam_ok and (t_spec[a] @ c_spec[a] - c_spec[a + 1] @ t_spec[a]).is_zero()
        for b in range(m):
            if b not in (a, a + 1):
                fam_ok = fam_ok and (t_spec[a] @ c_spec[b] - c_spec[b] @ t_spec[a]).is_zero()
    report.add("classical_hc_relations", fam_ok)

    # content eigenvalues of h_i = (k_i - 1)/(q - 1) at q = 1
    content_ok = True
    for i in range(1, n + 1):
        h = cl[("h", i)]
        for w in W.labels:
            expected = sum(1 for x in w if abs(x) == i)
            if h.entry(w, w) != RatFunc(expected):
                content_ok = False
    report.add("content_eigenvalues", content_ok)

    census, _ = isotypic_census(n, m)
    cls_ok = True
    for mu, entry in census.entries.items():
        block = [w for w in W.labels if tuple(sum(1 for x in w if abs(x) == i) for i in range(1, n + 1)) == mu]
        raising = [cl[("e", i)] for i in range(1, n)] + [cl[("ebar", i)] for i in range(1, n)]
        if raising:
            subspace = SuperSpace(block, {lab: W.parity[lab] for lab in block})
            restricted = []
            for op in raising:
                keep = {(r, c): v for (r, c), v in op.entries.items() if c in subspace.pos}
                restricted.append(SOp(subspace, W, op.par, keep, validate=False))
            from .superlinalg import joint_kernel

            hw = joint_kernel(restricted)
        else:
            hw = [{lab: ONE} for lab in block]
        if len(hw) != entry.hwv_dim:
            cls_ok = False
            continue
        seed = _pick_seed(hw, W)
        lowering = [cl[k] for k in cl if k[0] in ("e", "f", "ebar", "fbar", "kbar")]
        ech = Echelon()
        frontier = [seed]
        ech.insert(flatten_vector(W, seed))
        while frontier:
            new = []
            for g in lowering:
                for v in frontier:
                    img = g.apply(v)
                    if img and ech.insert(flatten_vector(W, img)):
                        new.append(img)
            frontier = new
        if ech.dim != entry.submodule_dim:
            cls_ok = False
    report.add("classical_census_matches", cls_ok)
    return report.finish()


# ---------------------------------------------------------------------------
# frozen expectations
# ---------------------------------------------------------------------------

def load_expectations() -> dict:
    try:
        text = resources.files("queerdual").joinpath("expected_values.json").read_text()
    except FileNotFoundError:
        return {}
    return json.loads(text)


def compare_expectations(report: VerifyReport, expected: dict, keys: list[str]) -> None:
    for key in keys:
        if key in expected:
            got = report.derived_values.get(key)
            report.add(f"regression[{key}]", got == expected[key], value={"got": got, "frozen": expected[key]})
