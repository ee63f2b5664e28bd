"""Exact linear algebra for R-submodules of ∏ Q[t]/(t^N).

Everything here is a Q-vector-space computation over Fractions.  Module
elements are flattened to sparse vectors keyed by branch-major position
i*N + e; a :class:`ModuleBasis` keeps a reduced row echelon basis with
monic pivots.  From such a basis the value semigroup ideal is read off
one axis-line at a time: for fixed values on the other branches, one
ordered echelon pass yields every exponent where the dimension of the
value filtration drops.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from ..errors import FrameError, PoleBoundError, TruncationError
from ..ideals import IdealFrame
from ..lattice import Point
from .series import SeriesVector

__all__ = ["ModuleBasis", "span_basis", "value_semigroup_ideal", "colon_solution_basis"]

Row = dict[int, Fraction]


def _axpy(target: Row, src: Row, f: Fraction) -> None:
    """target += f * src, dropping cancelled entries."""
    for k, v in src.items():
        nv = target.get(k, Fraction(0)) + f * v
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)


class ModuleBasis:
    """Reduced row echelon Q-basis of a subspace of ∏ Q[t]/(t^N).

    Invariants: each stored row is monic at its pivot (its minimal
    position) and has no other pivot in its support.
    """

    __slots__ = ("s", "N", "rows")

    def __init__(self, s: int, N: int):
        self.s = s
        self.N = N
        self.rows: dict[int, Row] = {}

    @property
    def dim(self) -> int:
        return len(self.rows)

    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def pivot_exponents(self, branch: int) -> list[int]:
        base = branch * self.N
        return sorted(p - base for p in self.rows if base <= p < base + self.N)

    def _fully_reduce(self, v: Row) -> None:
        """Eliminate every pivot position from v, in place."""
        while True:
            hits = sorted(p for p in v if p in self.rows)
            if not hits:
                return
            for p in hits:
                if p in v:
                    _axpy(v, self.rows[p], -v[p])

    def reduce(self, vec) -> Row:
        flat = vec.to_flat() if isinstance(vec, SeriesVector) else vec
        v = dict(flat)
        self._fully_reduce(v)
        return v

    def contains(self, vec) -> bool:
        return not self.reduce(vec)

    def insert(self, vec) -> bool:
        """Add a vector to the span; returns False if already contained."""
        flat = vec.to_flat() if isinstance(vec, SeriesVector) else vec
        v = dict(flat)
        self._fully_reduce(v)
        if not v:
            return False
        lead = min(v)
        c = v[lead]
        v = {k: val / c for k, val in v.items()}
        for row in self.rows.values():
            if lead in row:
                _axpy(row, v, -row[lead])
        self.rows[lead] = v
        return True

    def row_series(self) -> list[SeriesVector]:
        return [SeriesVector.from_flat(self.s, self.N, r) for r in self.rows.values()]

    def shifted(self, shift: Point) -> "ModuleBasis":
        """Basis of t^shift * (row space) mod t^N.

        Entries pushed past the truncation are dropped; callers must make
        sure those positions are covered separately (here they always fall
        in the monomial free zone of a conductor).
        """
        out = ModuleBasis(self.s, self.N)
        for row in self.rows.values():
            moved: Row = {}
            for pos, c in row.items():
                i, e = divmod(pos, self.N)
                e2 = e + shift[i]
                if e2 < self.N:
                    moved[i * self.N + e2] = c
            if moved:
                out.insert(moved)
        return out

    def copy(self) -> "ModuleBasis":
        out = ModuleBasis(self.s, self.N)
        out.rows = {p: dict(r) for p, r in self.rows.items()}
        return out


def span_basis(ring_gens: list[SeriesVector], module_gens: list[SeriesVector]) -> ModuleBasis:
    """Smallest Q-subspace containing module_gens and closed under
    multiplication by the ring generators.

    Only vectors that genuinely enlarged the span are re-expanded: the
    span is the Q-span of those vectors, so closing each of them under
    every generator closes the whole space.
    """
    if not module_gens:
        raise FrameError("a module needs at least one generator")
    s, N = module_gens[0].s, module_gens[0].N
    basis = ModuleBasis(s, N)
    queue = list(module_gens)
    while queue:
        v = queue.pop()
        if v.is_zero() or not basis.insert(v):
            continue
        for g in ring_gens:
            queue.append(v * g)
    return basis


def _line_pivot_exponents(basis: ModuleBasis, branch: int, alpha_rest: dict[int, int]) -> set[int]:
    """Exponents e on ``branch`` where dim E^alpha drops, alpha_rest fixed.

    Echelonize with columns ordered [off-branch positions with exp <
    alpha_k | branch positions by exponent | everything else]; a pivot in
    the middle block at exponent e is exactly a dimension drop at e.
    """
    N = basis.N

    def key(pos: int):
        i, e = divmod(pos, N)
        if i != branch:
            return (0, pos) if e < alpha_rest[i] else (2, pos)
        return (1, e)

    drops: set[int] = set()
    pending = [dict(r) for r in basis.rows.values() if r]
    while pending:
        best = min(pending, key=lambda r: min(key(p) for p in r))
        lead = min(best, key=key)
        kclass = key(lead)
        if kclass[0] == 1:
            drops.add(kclass[1])
        c = best[lead]
        nxt = []
        for r in pending:
            if r is best:
                continue
            if lead in r:
                _axpy(r, best, -r[lead] / c)
            if r:
                nxt.append(r)
        pending = nxt
    return drops


def value_semigroup_ideal(basis: ModuleBasis, hi: Point) -> IdealFrame:
    """Value vectors of the module over the box [0, hi], as an ideal frame.

    alpha belongs iff the filtration dimension drops in every coordinate
    at alpha.  hi_i <= N-2 is required so every dimension involved stays
    inside the truncation; the returned capping bound is only trustworthy
    after the caller's stability checks.
    """
    s, N = basis.s, basis.N
    if any(h > N - 2 for h in hi):
        raise TruncationError(f"scan box {hi} does not fit below truncation {N}")
    if basis.dim == 0:
        raise FrameError("the zero module has no value semigroup ideal")
    shape = tuple(h + 1 for h in hi)
    good = np.ones(shape, dtype=bool)
    for i in range(s):
        drop_i = np.zeros(shape, dtype=bool)
        rest_axes = [k for k in range(s) if k != i]
        rest_shape = tuple(hi[k] + 1 for k in rest_axes)
        for combo in np.ndindex(*rest_shape):
            alpha_rest = {k: int(c) for k, c in zip(rest_axes, combo)}
            drops = _line_pivot_exponents(basis, i, alpha_rest)
            line = np.array([e in drops for e in range(hi[i] + 1)], dtype=bool)
            idx: list = [slice(None)] * s
            for k, c in zip(rest_axes, combo):
                idx[k] = int(c)
            drop_i[tuple(idx)] = line
        good &= drop_i
    return IdealFrame._from_bitmap(tuple(0 for _ in range(s)), good)


def _nullspace(rows: list[Row], nvars: int) -> list[Row]:
    """Kernel basis of rows·x = 0 over Q (variables numbered 0..nvars-1)."""
    pivots: dict[int, Row] = {}

    def fully_reduce(v: Row) -> None:
        while True:
            hits = sorted(p for p in v if p in pivots)
            if not hits:
                return
            for p in hits:
                if p in v:
                    _axpy(v, pivots[p], -v[p])

    for raw in rows:
        r = dict(raw)
        fully_reduce(r)
        if not r:
            continue
        lead = min(r)
        c = r[lead]
        r = {k: v / c for k, v in r.items()}
        for other in pivots.values():
            if lead in other:
                _axpy(other, r, -other[lead])
        pivots[lead] = r

    free = [v for v in range(nvars) if v not in pivots]
    kernel = []
    for f in free:
        sol: Row = {f: Fraction(1)}
        for piv, row in pivots.items():
            c = row.get(f)
            if c:
                sol[piv] = -c
        kernel.append(sol)
    return kernel


def colon_solution_basis(
    ring_gens: list[SeriesVector],
    K_basis: ModuleBasis,
    E_gens: list[SeriesVector],
    gamma_K: Point,
    poles: Point,
) -> ModuleBasis:
    """Basis of t^poles * (K : E) = {x honest : x * E ⊆ t^poles * K}.

    Requires K ⊇ t^gamma_K * (full space) — checked explicitly — and
    N >= gamma_K + poles + 2 per branch, so that positions the truncation
    cannot see are exactly the free positions of the conductor.  The
    result is verified to be closed under the ring generators.
    """
    s, N = K_basis.s, K_basis.N
    for i in range(s):
        if gamma_K[i] + poles[i] + 2 > N:
            raise TruncationError(
                f"truncation {N} too small for conductor {gamma_K} plus poles {poles}"
            )
        for e in range(gamma_K[i], N):
            if not K_basis.contains(SeriesVector.monomial(s, N, i, e)):
                raise TruncationError(
                    f"left module misses t^{e} on branch {i}: "
                    f"conductor bound {gamma_K} is not valid at truncation {N}"
                )
    shifted = K_basis.shifted(poles)
    for i in range(s):
        for e in range(gamma_K[i] + poles[i], N):
            shifted.insert(SeriesVector.monomial(s, N, i, e))

    # x is a symbolic honest series with one variable per position.  For
    # each E generator g, the product x*g is a vector of linear forms:
    # its coefficient at (i, m) is sum_a x_(i,a) * g_i[m-a].  Reducing
    # that vector against the shifted basis leaves the forms that have to
    # vanish for membership.
    constraints: list[Row] = []
    for g in E_gens:
        forms: dict[int, Row] = {}
        for i in range(s):
            gb = g.coeffs[i]
            for m in range(N):
                form: Row = {}
                for eb, cb in gb.items():
                    a = m - eb
                    if 0 <= a < N:
                        form[i * N + a] = cb
                if form:
                    forms[i * N + m] = form
        for piv in sorted(shifted.rows):
            frm = forms.pop(piv, None)
            if frm is None:
                continue
            row = shifted.rows[piv]
            for pos, c in row.items():
                if pos == piv:
                    continue
                target = forms.setdefault(pos, {})
                for var, fc in frm.items():
                    nv = target.get(var, Fraction(0)) - c * fc
                    if nv:
                        target[var] = nv
                    else:
                        target.pop(var, None)
        constraints.extend(form for form in forms.values() if form)

    kernel = _nullspace(constraints, s * N)
    out = ModuleBasis(s, N)
    for sol in kernel:
        out.insert(sol)
    # closure under the ring action is automatic for a true colon module;
    # failure means the pole bound or the truncation clipped something
    check = out.copy()
    for r in out.row_series():
        for g in ring_gens:
            if check.insert(r * g):
                raise PoleBoundError(
                    "colon solution space is not closed under the ring action; "
                    "increase the pole bound or the truncation"
                )
    return out
