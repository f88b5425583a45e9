"""Exact matrix algebra over monomials c * (d/dt)^p.

Coefficients are Gaussian integers, so products and anticommutators of
unit-entry matrices stay exact; the derivative power p grades each
entry, and adding entries of different grade is an error rather than a
silent coercion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import GradedSumError, InputError
from .graph import (
    Adinkra,
    boson_nodes,
    fermion_nodes,
    verify_heights,
    verify_odd_dashing,
)

# ---------- monomials ----------


@dataclass(frozen=True)
class Monomial:
    """(re + im*i) * (d/dt)**dpow, with zero always stored as (0, 0, 0)."""

    re: int = 0
    im: int = 0
    dpow: int = 0

    def __post_init__(self):
        for part in (self.re, self.im, self.dpow):
            if not isinstance(part, int):
                raise InputError(f"monomial parts must be integers, got {part!r}")
        if self.dpow < 0:
            raise InputError(f"derivative power must be >= 0, got {self.dpow}")
        if self.re == 0 and self.im == 0 and self.dpow != 0:
            raise InputError("the zero monomial cannot carry a derivative")

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    @property
    def is_unit(self) -> bool:
        """Coefficient in {1, -1, i, -i} (derivative power unconstrained)."""
        return (abs(self.re), abs(self.im)) in ((1, 0), (0, 1))

    def mul(self, other: "Monomial") -> "Monomial":
        re = self.re * other.re - self.im * other.im
        im = self.re * other.im + self.im * other.re
        if re == 0 and im == 0:
            return ZERO
        return Monomial(re, im, self.dpow + other.dpow)

    def add(self, other: "Monomial") -> "Monomial":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.dpow != other.dpow:
            raise GradedSumError(
                f"cannot add {self} and {other}: derivative powers differ"
            )
        re, im = self.re + other.re, self.im + other.im
        if re == 0 and im == 0:
            return ZERO
        return Monomial(re, im, self.dpow)

    def neg(self) -> "Monomial":
        if self.is_zero:
            return ZERO
        return Monomial(-self.re, -self.im, self.dpow)

    def drop_phase_and_derivative(self) -> "Monomial":
        """Map c*(d/dt)^p to the sign of its real or imaginary part."""
        if self.is_zero:
            return ZERO
        if self.re and self.im:
            raise InputError(f"{self} has no single phase to drop")
        sign = 1 if (self.re or self.im) > 0 else -1
        return Monomial(sign, 0, 0)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        if self.im == 0:
            coeff = str(self.re)
        elif self.re == 0:
            coeff = {1: "i", -1: "-i"}.get(self.im, f"{self.im}i")
        else:
            sign = "+" if self.im > 0 else "-"
            mag = abs(self.im)
            coeff = f"{self.re}{sign}{'' if mag == 1 else mag}i"
        if self.dpow == 0:
            return coeff
        deriv = "d/dt" if self.dpow == 1 else f"(d/dt)^{self.dpow}"
        return f"{coeff}·{deriv}"


ZERO = Monomial(0, 0, 0)
ONE = Monomial(1, 0, 0)
MINUS_ONE = Monomial(-1, 0, 0)
I_UNIT = Monomial(0, 1, 0)
DT = Monomial(1, 0, 1)


# ---------- monomial matrices ----------


class MonomialMatrix:
    """Square sparse matrix of monomials."""

    __slots__ = ("dim", "_rows")

    def __init__(self, dim: int, entries: Mapping | None = None):
        if dim < 1:
            raise InputError(f"matrix dimension must be positive, got {dim}")
        self.dim = dim
        self._rows: list[dict[int, Monomial]] = [{} for _ in range(dim)]
        if entries:
            for (r, c), m in entries.items():
                self.set_entry(r, c, m)

    def set_entry(self, row: int, col: int, value: Monomial) -> None:
        if not 0 <= row < self.dim or not 0 <= col < self.dim:
            raise InputError(f"entry ({row}, {col}) outside dim {self.dim}")
        if not isinstance(value, Monomial):
            raise InputError(f"entry must be a Monomial, got {value!r}")
        if value.is_zero:
            self._rows[row].pop(col, None)
        else:
            self._rows[row][col] = value

    def entry(self, row: int, col: int) -> Monomial:
        return self._rows[row].get(col, ZERO)

    def iter_entries(self):
        for r, row in enumerate(self._rows):
            for c, m in sorted(row.items()):
                yield r, c, m

    @property
    def is_zero(self) -> bool:
        return all(not row for row in self._rows)

    @classmethod
    def identity(cls, dim: int, scale: Monomial = ONE) -> "MonomialMatrix":
        out = cls(dim)
        for r in range(dim):
            out.set_entry(r, r, scale)
        return out

    @classmethod
    def from_rows(cls, rows) -> "MonomialMatrix":
        """Build from a dense list of lists of Monomials or integers."""
        dim = len(rows)
        out = cls(dim)
        for r, row in enumerate(rows):
            if len(row) != dim:
                raise InputError(f"row {r} has length {len(row)}, expected {dim}")
            for c, m in enumerate(row):
                if isinstance(m, int):
                    m = Monomial(m, 0, 0) if m else ZERO
                out.set_entry(r, c, m)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialMatrix):
            return NotImplemented
        return self.dim == other.dim and self._rows == other._rows

    def __hash__(self):
        raise TypeError("MonomialMatrix is unhashable")

    def map_entries(self, fn) -> "MonomialMatrix":
        out = MonomialMatrix(self.dim)
        for r, c, m in self.iter_entries():
            out.set_entry(r, c, fn(m))
        return out

    def transpose(self) -> "MonomialMatrix":
        out = MonomialMatrix(self.dim)
        for r, c, m in self.iter_entries():
            out.set_entry(c, r, m)
        return out

    def block(self, rows: range, cols: range) -> "MonomialMatrix":
        """Square sub-block (used to split boson/fermion sectors)."""
        if len(rows) != len(cols):
            raise InputError("block must be square")
        out = MonomialMatrix(len(rows))
        for i, r in enumerate(rows):
            for j, c in enumerate(cols):
                out.set_entry(i, j, self.entry(r, c))
        return out

    def to_text(self) -> str:
        cells = [[str(self.entry(r, c)) for c in range(self.dim)]
                 for r in range(self.dim)]
        width = max(len(s) for row in cells for s in row)
        return "\n".join(
            "  ".join(s.rjust(width) for s in row) for row in cells
        )

    def __repr__(self) -> str:
        return f"MonomialMatrix(dim={self.dim})\n{self.to_text()}"


def _accumulate(rows: list[dict[int, Monomial]], r: int, c: int,
                term: Monomial) -> None:
    if term.is_zero:
        return
    cur = rows[r].get(c)
    try:
        acc = term if cur is None else cur.add(term)
    except GradedSumError:
        raise GradedSumError(
            f"mixed derivative powers at entry ({r}, {c}): "
            f"{cur} + {term}"
        ) from None
    if acc.is_zero:
        rows[r].pop(c, None)
    else:
        rows[r][c] = acc


def mat_mul(a: MonomialMatrix, b: MonomialMatrix) -> MonomialMatrix:
    if a.dim != b.dim:
        raise InputError(f"dimension mismatch: {a.dim} vs {b.dim}")
    out = MonomialMatrix(a.dim)
    for t in range(a.dim):
        for u, m1 in a._rows[t].items():
            for s, m2 in b._rows[u].items():
                _accumulate(out._rows, t, s, m1.mul(m2))
    return out


def mat_add(a: MonomialMatrix, b: MonomialMatrix) -> MonomialMatrix:
    if a.dim != b.dim:
        raise InputError(f"dimension mismatch: {a.dim} vs {b.dim}")
    out = MonomialMatrix(a.dim)
    for r, c, m in a.iter_entries():
        _accumulate(out._rows, r, c, m)
    for r, c, m in b.iter_entries():
        _accumulate(out._rows, r, c, m)
    return out


def mat_neg(a: MonomialMatrix) -> MonomialMatrix:
    return a.map_entries(Monomial.neg)


def anticommutator(a: MonomialMatrix, b: MonomialMatrix) -> MonomialMatrix:
    return mat_add(mat_mul(a, b), mat_mul(b, a))


# ---------- transformation matrices from an adinkra ----------


@dataclass(frozen=True)
class GammaSet:
    """One transformation matrix per color over a boson-then-fermion basis."""

    matrices: Mapping[int, MonomialMatrix]
    basis: tuple[int, ...]
    boson_count: int

    @property
    def dim(self) -> int:
        return len(self.basis)

    def boson_range(self) -> range:
        return range(self.boson_count)

    def fermion_range(self) -> range:
        return range(self.boson_count, self.dim)


def adinkra_to_gamma(adinkra: Adinkra, validate: bool = True) -> GammaSet:
    """Read the per-color transformation matrices off the graph.

    Basis: bosons in ascending label order, then fermions.  The entry in
    row t, column s is the coefficient of state s in the transform of
    state t along one edge: the edge sign, times i when t is a fermion,
    times d/dt when s sits above t.
    """
    if adinkra.dashing is None or adinkra.heights is None:
        raise InputError("gamma matrices need both dashing and heights")
    if validate:
        dash_report = verify_odd_dashing(adinkra)
        if not dash_report:
            raise InputError(f"invalid adinkra: {dash_report.summary()}")
        height_report = verify_heights(adinkra)
        if not height_report:
            raise InputError(f"invalid adinkra: {height_report.summary()}")
    bosons = boson_nodes(adinkra)
    fermions = fermion_nodes(adinkra)
    basis = bosons + fermions
    index = {label: i for i, label in enumerate(basis)}
    heights = adinkra.heights
    dim = len(basis)

    matrices = {}
    for color in adinkra.colors():
        m = MonomialMatrix(dim)
        for e in adinkra.edges:
            if e.color != color:
                continue
            sign = adinkra.dashing[e]
            for s, t in ((e.u, e.v), (e.v, e.u)):
                fermionic_target = index[t] >= len(bosons)
                coeff = (0, sign) if fermionic_target else (sign, 0)
                dpow = 1 if heights[s] > heights[t] else 0
                m.set_entry(index[t], index[s], Monomial(*coeff, dpow))
        matrices[color] = m
    return GammaSet(matrices, basis, len(bosons))


# ---------- algebra checks ----------


@dataclass(frozen=True)
class AlgebraViolation:
    relation: str
    row: int
    col: int
    got: Monomial
    want: Monomial

    def __str__(self) -> str:
        return (
            f"{self.relation} entry ({self.row}, {self.col}): "
            f"got {self.got}, want {self.want}"
        )


@dataclass(frozen=True)
class AlgebraReport:
    check: str
    violations: tuple[AlgebraViolation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def summary(self) -> str:
        if self.ok:
            return f"{self.check}: ok"
        return f"{self.check}: {len(self.violations)} violation(s)"

    def violated_relations(self) -> tuple[str, ...]:
        seen = []
        for v in self.violations:
            if v.relation not in seen:
                seen.append(v.relation)
        return tuple(seen)


def _compare(relation: str, got: MonomialMatrix,
             want: MonomialMatrix, out: list) -> None:
    for r in range(got.dim):
        cols = set(got._rows[r]) | set(want._rows[r])
        for c in sorted(cols):
            g, w = got.entry(r, c), want.entry(r, c)
            if g != w:
                out.append(AlgebraViolation(relation, r, c, g, w))


def check_garden(gammas: GammaSet, stop_early: bool = True) -> AlgebraReport:
    """Verify {Gamma_I, Gamma_J} = 2i * d/dt * delta_IJ."""
    colors = sorted(gammas.matrices)
    dim = gammas.dim
    diag = MonomialMatrix.identity(dim, Monomial(0, 2, 1))
    zero = MonomialMatrix(dim)
    violations: list[AlgebraViolation] = []
    for i, ci in enumerate(colors):
        for cj in colors[i:]:
            try:
                got = anticommutator(gammas.matrices[ci], gammas.matrices[cj])
            except GradedSumError as exc:
                violations.append(
                    AlgebraViolation(
                        f"{{G{ci}, G{cj}}}: {exc}", -1, -1, ZERO, ZERO
                    )
                )
                if stop_early:
                    return AlgebraReport("garden", tuple(violations))
                continue
            want = diag if ci == cj else zero
            _compare(f"{{G{ci}, G{cj}}}", got, want, violations)
            if violations and stop_early:
                return AlgebraReport("garden", tuple(violations))
    return AlgebraReport("garden", tuple(violations))


def strip_derivatives(m: MonomialMatrix) -> MonomialMatrix:
    """Reduce each entry to a bare sign, discarding phase and d/dt."""
    return m.map_entries(Monomial.drop_phase_and_derivative)


def check_block_transpose(gammas: GammaSet) -> AlgebraReport:
    """Off-diagonal blocks of each Gamma are mutual transposes, and
    cross-color products of opposite blocks are antisymmetric, once
    entries are stripped to bare signs."""
    br, fr = gammas.boson_range(), gammas.fermion_range()
    violations: list[AlgebraViolation] = []
    stripped = {
        c: strip_derivatives(m) for c, m in sorted(gammas.matrices.items())
    }
    blocks = {
        c: (m.block(br, fr), m.block(fr, br)) for c, m in stripped.items()
    }
    for c, (upper, lower) in blocks.items():
        if upper.transpose() != lower:
            _compare(f"G{c} block transpose", upper.transpose(), lower,
                     violations)
    for ci, (_, lower_i) in blocks.items():
        for cj, (upper_j, _) in blocks.items():
            if ci == cj:
                continue
            prod = mat_mul(lower_i, upper_j)
            if prod.transpose() != mat_neg(prod):
                _compare(f"G{ci}·G{cj} antisymmetry", prod.transpose(),
                         mat_neg(prod), violations)
    return AlgebraReport("block-transpose", tuple(violations))


# ---------- quaternion checks ----------

QUATERNION_RELATIONS = ("i^2", "j^2", "k^2", "ijk", "{i,j}", "{i,k}", "{j,k}")


def canonical_quaternion_matrices() -> dict[str, MonomialMatrix]:
    """The standard signed-permutation representation of i, j, k."""
    return {
        "i": MonomialMatrix.from_rows([
            [0, 1, 0, 0],
            [-1, 0, 0, 0],
            [0, 0, 0, -1],
            [0, 0, 1, 0],
        ]),
        "j": MonomialMatrix.from_rows([
            [0, 0, 1, 0],
            [0, 0, 0, 1],
            [-1, 0, 0, 0],
            [0, -1, 0, 0],
        ]),
        "k": MonomialMatrix.from_rows([
            [0, 0, 0, 1],
            [0, 0, -1, 0],
            [0, 1, 0, 0],
            [-1, 0, 0, 0],
        ]),
    }


def check_quaternion(matrices: Mapping[str, MonomialMatrix]) -> AlgebraReport:
    """Verify i^2 = j^2 = k^2 = ijk = -1 and pairwise anticommutation."""
    for name in ("i", "j", "k"):
        if name not in matrices:
            raise InputError(f"missing quaternion matrix {name!r}")
    mi, mj, mk = matrices["i"], matrices["j"], matrices["k"]
    dims = {m.dim for m in (mi, mj, mk)}
    if dims != {4}:
        raise InputError(f"quaternion matrices must be 4x4, got dims {dims}")
    for name, m in (("i", mi), ("j", mj), ("k", mk)):
        for r, c, mono in m.iter_entries():
            if mono.dpow != 0 or mono.im != 0 or mono.re not in (1, -1):
                raise InputError(
                    f"matrix {name!r} entry ({r}, {c}) = {mono} is not a "
                    "plain sign"
                )
    neg_id = MonomialMatrix.identity(4, MINUS_ONE)
    zero = MonomialMatrix(4)
    violations: list[AlgebraViolation] = []
    _compare("i^2", mat_mul(mi, mi), neg_id, violations)
    _compare("j^2", mat_mul(mj, mj), neg_id, violations)
    _compare("k^2", mat_mul(mk, mk), neg_id, violations)
    _compare("ijk", mat_mul(mat_mul(mi, mj), mk), neg_id, violations)
    _compare("{i,j}", anticommutator(mi, mj), zero, violations)
    _compare("{i,k}", anticommutator(mi, mk), zero, violations)
    _compare("{j,k}", anticommutator(mj, mk), zero, violations)
    return AlgebraReport("quaternion", tuple(violations))
