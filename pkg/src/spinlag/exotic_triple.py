"""Partial moment maps of a 2x2x2 tensor and the equality of their traces.

A tensor psi = sum psi[i][j][k] u_i (x) v_j (x) w_k lives in U (x) V (x) W, each
factor carrying a symplectic form fixed by the value of <x_1, x_2> on its
basis. Flattening along one leg writes psi = x_1 (x) e_1 + x_2 (x) e_2 with
e_1, e_2 in the tensor product of the other two factors, which carries the
product of their symplectic forms (a symmetric form).

Everything here is written with plain ring operations, so passing MPoly
symbols for the entries and pairings yields full symbolic identities.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .binary_forms import MomentImage
from .errors import DomainError
from .poly_core.univariate import exact_div

LEGS = (1, 2, 3)


@dataclass(frozen=True)
class TripleTensor:
    entries: tuple  # entries[i][j][k], i, j, k in {0, 1}
    pairings: tuple = (1, 1, 1)  # <u1,u2>, <v1,v2>, <w1,w2>

    def __post_init__(self):
        ent = tuple(tuple(tuple(row) for row in plane) for plane in self.entries)
        if len(ent) != 2 or any(len(p) != 2 or any(len(r) != 2 for r in p) for p in ent):
            raise DomainError("a triple tensor has 2x2x2 entries")
        if len(self.pairings) != 3 or any(p == 0 for p in self.pairings):
            raise DomainError("the three pairing values must be nonzero")
        object.__setattr__(self, "entries", ent)
        object.__setattr__(self, "pairings", tuple(self.pairings))

    @classmethod
    def from_flat(cls, values: Sequence, pairings=(1, 1, 1)) -> "TripleTensor":
        """Entries in the order psi_111, psi_112, psi_121, ..., psi_222."""
        v = list(values)
        if len(v) != 8:
            raise DomainError("need 8 entries")
        return cls((((v[0], v[1]), (v[2], v[3])), ((v[4], v[5]), (v[6], v[7]))), pairings)

    @classmethod
    def from_slices(cls, e1, e2, pairings=(1, 1, 1)) -> "TripleTensor":
        """psi = u_1 (x) e_1 + u_2 (x) e_2 with e as 2x2 matrices over (v, w)."""
        return cls((e1, e2), pairings)

    @classmethod
    def decomposable(cls, u, v, w, pairings=(1, 1, 1)) -> "TripleTensor":
        return cls(tuple(tuple(tuple(u[i] * v[j] * w[k] for k in range(2)) for j in range(2))
                         for i in range(2)), pairings)

    def __getitem__(self, idx):
        i, j, k = idx
        return self.entries[i][j][k]

    def flat(self) -> list:
        return [self[i, j, k] for i in range(2) for j in range(2) for k in range(2)]

    def scale(self, c) -> "TripleTensor":
        return TripleTensor.from_flat([c * x for x in self.flat()], self.pairings)

    def transform(self, leg: int, g) -> "TripleTensor":
        """Apply the 2x2 matrix g = ((a, b), (c, d)) to the basis coordinates of one leg."""
        _check_leg(leg)
        out = {}
        for i in range(2):
            for j in range(2):
                for k in range(2):
                    idx = [i, j, k]
                    total = 0
                    for s in range(2):
                        src = list(idx)
                        src[leg - 1] = s
                        total = total + g[idx[leg - 1]][s] * self[tuple(src)]
                    out[(i, j, k)] = total
        return TripleTensor.from_flat([out[(i, j, k)] for i in range(2) for j in range(2)
                                       for k in range(2)], self.pairings)


def _check_leg(leg: int) -> None:
    if leg not in LEGS:
        raise DomainError(f"leg must be 1, 2 or 3, got {leg}")


@dataclass(frozen=True)
class Slice:
    leg: int
    e1: tuple  # 2x2 matrix over the two remaining legs, in their original order
    e2: tuple
    pairing: object  # <x_1, x_2> on the sliced leg
    other_pairings: tuple  # pairings of the two remaining legs


def slice(t: TripleTensor, leg: int) -> Slice:
    """Flatten along ``leg``: psi = x_1 (x) e_1 + x_2 (x) e_2."""
    _check_leg(leg)
    mats = []
    for s in range(2):
        rows = []
        for a in range(2):
            row = []
            for b in range(2):
                idx = [a, b]
                idx.insert(leg - 1, s)
                row.append(t[tuple(idx)])
            rows.append(tuple(row))
        mats.append(tuple(rows))
    others = tuple(p for n, p in zip(LEGS, t.pairings) if n != leg)
    return Slice(leg, mats[0], mats[1], t.pairings[leg - 1], others)


def recombine(s: Slice) -> TripleTensor:
    values = {}
    for sel, mat in ((0, s.e1), (1, s.e2)):
        for a in range(2):
            for b in range(2):
                idx = [a, b]
                idx.insert(s.leg - 1, sel)
                values[tuple(idx)] = mat[a][b]
    pairings = list(s.other_pairings)
    pairings.insert(s.leg - 1, s.pairing)
    return TripleTensor.from_flat([values[(i, j, k)] for i in range(2) for j in range(2)
                                   for k in range(2)], tuple(pairings))


def product_pairing(E, F, pv=1, pw=1):
    """(E, F) for the product of two symplectic forms: <., .>_V <., .>_W."""
    return pv * pw * (E[0][0] * F[1][1] - E[0][1] * F[1][0] - E[1][0] * F[0][1] + E[1][1] * F[0][0])


def _brackets(s: Slice):
    pv, pw = s.other_pairings
    return (product_pairing(s.e1, s.e1, pv, pw),
            product_pairing(s.e1, s.e2, pv, pw),
            product_pairing(s.e2, s.e2, pv, pw))


def phi(t: TripleTensor, leg: int) -> MomentImage:
    """(e1,e1) x1^2 + 2 (e1,e2) x1 x2 + (e2,e2) x2^2, stored as b0, b1, b2."""
    s11, s12, s22 = _brackets(slice(t, leg))
    return MomentImage(s11, 2 * s12, s22)


def trace_phi_squared(t: TripleTensor, leg: int):
    """2 <x1,x2>^2 ((e1,e1)(e2,e2) - (e1,e2)^2)."""
    s = slice(t, leg)
    s11, s12, s22 = _brackets(s)
    return 2 * s.pairing * s.pairing * (s11 * s22 - s12 * s12)


@dataclass
class TraceReport:
    traces: tuple
    equal: bool
    common_value: object
    hyperdeterminant: object
    notes: list = field(default_factory=list)


def hyperdeterminant(t: TripleTensor):
    """Cayley's 2x2x2 hyperdeterminant, for comparison only."""
    a = t
    return (a[0, 0, 0] ** 2 * a[1, 1, 1] ** 2 + a[0, 0, 1] ** 2 * a[1, 1, 0] ** 2
            + a[0, 1, 0] ** 2 * a[1, 0, 1] ** 2 + a[1, 0, 0] ** 2 * a[0, 1, 1] ** 2
            - 2 * (a[0, 0, 0] * a[0, 0, 1] * a[1, 1, 0] * a[1, 1, 1]
                   + a[0, 0, 0] * a[0, 1, 0] * a[1, 0, 1] * a[1, 1, 1]
                   + a[0, 0, 0] * a[0, 1, 1] * a[1, 0, 0] * a[1, 1, 1]
                   + a[0, 0, 1] * a[0, 1, 0] * a[1, 0, 1] * a[1, 1, 0]
                   + a[0, 0, 1] * a[0, 1, 1] * a[1, 1, 0] * a[1, 0, 0]
                   + a[0, 1, 0] * a[0, 1, 1] * a[1, 0, 1] * a[1, 0, 0])
            + 4 * (a[0, 0, 0] * a[0, 1, 1] * a[1, 0, 1] * a[1, 1, 0]
                   + a[0, 0, 1] * a[0, 1, 0] * a[1, 0, 0] * a[1, 1, 1]))


def verify_trace_equality(t: TripleTensor) -> TraceReport:
    traces = tuple(trace_phi_squared(t, leg) for leg in LEGS)
    equal = traces[0] == traces[1] == traces[2]
    if not equal:
        raise AssertionError(f"traces differ: {traces}")
    hd = hyperdeterminant(t)
    notes = []
    if t.pairings == (1, 1, 1):
        ratio = None if hd == 0 else exact_div(traces[0], hd)
        notes.append(f"common trace / hyperdeterminant = {ratio}")
    return TraceReport(traces, equal, traces[0], hd, notes)


# -- adapted coordinates -------------------------------------------------------

@dataclass(frozen=True)
class SliceData:
    """e_2 = v_1 (x) (a w_1 + b w_2) + v_2 (x) (c w_1 + d w_2) after moving e_1 to v_1 w_1 + v_2 w_2."""

    a: object
    b: object
    c: object
    d: object
    u_pairing: object = 1
    v_pairing: object = 1
    w_pairing: object = 1  # pairing on the rescaled w-basis

    def trace_formula(self):
        """2 <u1,u2>^2 (<v1,v2><w1,w2>)^2 (4(ad - bc) - (a + d)^2)."""
        scale = (self.v_pairing * self.w_pairing) ** 2
        return 2 * self.u_pairing ** 2 * scale * (4 * (self.a * self.d - self.b * self.c)
                                                  - (self.a + self.d) ** 2)


@dataclass
class NormalForm:
    leg: int
    degenerate: bool
    data: SliceData | None


def normal_form(t: TripleTensor, leg: int = 1) -> NormalForm:
    """Change the w-basis so that e_1 becomes v_1 (x) w_1 + v_2 (x) w_2.

    Requires e_1 invertible as a 2x2 matrix; otherwise the report is
    marked degenerate. The new w-basis is w'_j = sum_k E1[j][k] w_k, whose
    pairing is det(E1) <w1,w2>; e_2 then has matrix E2 E1^(-1).
    """
    s = slice(t, leg)
    E1, E2 = s.e1, s.e2
    det = E1[0][0] * E1[1][1] - E1[0][1] * E1[1][0]
    if det == 0:
        return NormalForm(leg, True, None)
    inv = ((exact_div(E1[1][1], det), exact_div(-E1[0][1], det)),
           (exact_div(-E1[1][0], det), exact_div(E1[0][0], det)))
    m = [[E2[r][0] * inv[0][c] + E2[r][1] * inv[1][c] for c in range(2)] for r in range(2)]
    return NormalForm(leg, False, SliceData(m[0][0], m[0][1], m[1][0], m[1][1], s.pairing,
                                            s.other_pairings[0], s.other_pairings[1] * det))


def from_slice_data(a, b, c, d) -> TripleTensor:
    """psi = u_1 (x) (v1 w1 + v2 w2) + u_2 (x) e_2 with unit pairings."""
    return TripleTensor.from_slices(((1, 0), (0, 1)), ((a, b), (c, d)))
