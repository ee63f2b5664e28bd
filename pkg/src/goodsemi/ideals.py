"""Finite representation of semigroup ideals of N^s and good semigroups.

An ideal E of a good semigroup lives in Z^s, is bounded below, and contains
a whole translated orthant gamma + N^s.  We store the branch count ``s``,
the minimum ``mu``, a capping bound ``gamma``, and the finite point set
``frame`` = E intersected with [mu, gamma]; membership of an arbitrary
point is *defined* by the min-capping rule

    alpha in E  iff  cmin(alpha, gamma) in frame.

``gamma`` is always normalized to the smallest bound for which this rule
reproduces the set it was constructed from (the per-axis slice-stability
scan in :meth:`IdealFrame._normalize`).  For validated-good ideals that
minimal bound coincides with the conductor; for frames that merely satisfy
(E1) it can sit strictly above the conductor, which is exposed separately
as :attr:`IdealFrame.conductor`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .errors import FrameError, NotCertifiedError, ParseError
from .lattice import (
    Point,
    add,
    as_point,
    check_same_dim,
    cmax,
    cmin,
    ones,
    sub,
    zero,
)

__all__ = [
    "IdealFrame",
    "GoodSemigroup",
    "ValidationReport",
    "LocalDecomposition",
    "validate",
    "sum_ideals",
    "is_subset",
    "is_local",
    "decompose",
    "product_semigroups",
    "recombine",
    "to_json",
    "from_json",
]


def _suffix_or(a: np.ndarray, axis: int) -> np.ndarray:
    """out[x] = OR of a at positions >= x along ``axis`` (inclusive)."""
    return np.flip(np.logical_or.accumulate(np.flip(a, axis), axis=axis), axis)


def _suffix_or_strict(a: np.ndarray, axis: int) -> np.ndarray:
    """out[x] = OR of a at positions > x along ``axis`` (exclusive)."""
    inc = _suffix_or(a, axis)
    out = np.zeros_like(a)
    src = [slice(None)] * a.ndim
    dst = [slice(None)] * a.ndim
    src[axis] = slice(1, None)
    dst[axis] = slice(0, -1)
    out[tuple(dst)] = inc[tuple(src)]
    return out


def _suffix_and(a: np.ndarray, axis: int) -> np.ndarray:
    return np.flip(np.logical_and.accumulate(np.flip(a, axis), axis=axis), axis)


class IdealFrame:
    """Exact finite representation of a semigroup ideal of Z^s."""

    __slots__ = (
        "s",
        "mu",
        "gamma",
        "frame",
        "_sorted",
        "_bitmap",
        "_conductor",
        "_report_cache",
    )

    def __init__(self, s: int, mu, gamma, frame, *, _normalized: bool = False):
        s = int(s)
        if s < 1:
            raise FrameError("branch count must be >= 1")
        mu = as_point(mu)
        gamma = as_point(gamma)
        if len(mu) != s or len(gamma) != s:
            raise FrameError(f"mu/gamma must have {s} coordinates")
        pts = frozenset(as_point(p) for p in frame)
        if not pts:
            raise FrameError("frame must be nonempty")
        for p in pts:
            if len(p) != s:
                raise FrameError(f"frame point {p} has wrong dimension")
            if not all(m <= c <= g for m, c, g in zip(mu, p, gamma)):
                raise FrameError(f"frame point {p} outside [{mu}, {gamma}]")
        if mu not in pts:
            raise FrameError(f"mu={mu} must belong to the frame")
        if gamma not in pts:
            raise FrameError(f"gamma={gamma} must belong to the frame")
        self.s = s
        self.mu = mu
        self.gamma = gamma
        self.frame = pts
        self._sorted = None
        self._bitmap = None
        self._conductor = None
        self._report_cache = {}
        if not _normalized:
            self._normalize()

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_points(cls, points, gamma) -> "IdealFrame":
        """Build from the point set E ∩ [min, gamma]; gamma must be a valid
        capping bound for the intended set (it is then minimized)."""
        pts = [as_point(p) for p in points]
        if not pts:
            raise FrameError("empty point set")
        s = len(pts[0])
        mu = tuple(min(p[i] for p in pts) for i in range(s))
        return cls(s, mu, gamma, pts)

    @classmethod
    def _from_bitmap(cls, lo: Point, bitmap: np.ndarray) -> "IdealFrame":
        """Build from a membership bitmap over [lo, lo+shape-1] that is exact
        at its upper corner (capping there reproduces the intended set)."""
        if not bitmap.any():
            raise FrameError("empty point set")
        s = len(lo)
        hi = tuple(l + n - 1 for l, n in zip(lo, bitmap.shape))
        coords = np.argwhere(bitmap)
        mu = tuple(int(c) + l for c, l in zip(coords.min(axis=0), lo))
        if not bitmap[tuple(m - l for m, l in zip(mu, lo))]:
            raise FrameError(f"set has no minimum element (componentwise min {mu} missing)")
        sl = tuple(slice(m - l, None) for m, l in zip(mu, lo))
        sub_bitmap = bitmap[sl]
        pts = [tuple(int(c) + m for c, m in zip(row, mu)) for row in np.argwhere(sub_bitmap)]
        return cls(s, mu, hi, pts)

    def _normalize(self) -> None:
        """Shrink gamma to the smallest exact capping bound.

        A bound c is exact iff along every axis i all box slices at levels
        >= c_i are identical; the exact bounds therefore form an upper
        orthant and the componentwise minimum is found per axis.
        """
        arr = self._frame_bitmap()
        sigma = list(self.gamma)
        for ax in range(self.s):
            t = arr.shape[ax] - 1
            while t > 0:
                a = np.take(arr, t - 1, axis=ax)
                b = np.take(arr, t, axis=ax)
                if not np.array_equal(a, b):
                    break
                t -= 1
            sigma[ax] = self.mu[ax] + t
        sigma_t = tuple(sigma)
        if sigma_t != self.gamma:
            sl = tuple(slice(0, g - m + 1) for m, g in zip(self.mu, sigma_t))
            self.gamma = sigma_t
            self._bitmap = np.ascontiguousarray(arr[sl])
            pts = frozenset(
                tuple(int(c) + m for c, m in zip(row, self.mu))
                for row in np.argwhere(self._bitmap)
            )
            self.frame = pts
            self._sorted = None

    # -- basic accessors ------------------------------------------------------

    def _frame_bitmap(self) -> np.ndarray:
        """Membership over the box [mu, gamma] as a bool array."""
        if self._bitmap is None:
            shape = tuple(g - m + 1 for m, g in zip(self.mu, self.gamma))
            arr = np.zeros(shape, dtype=bool)
            idx = np.array(self.frame_sorted, dtype=np.int64) - np.array(self.mu)
            arr[tuple(idx.T)] = True
            self._bitmap = arr
        return self._bitmap

    @property
    def frame_sorted(self) -> tuple[Point, ...]:
        if self._sorted is None:
            self._sorted = tuple(sorted(self.frame))
        return self._sorted

    def fingerprint(self):
        return (self.s, self.mu, self.gamma, self.frame_sorted)

    def __eq__(self, other):
        if not isinstance(other, IdealFrame):
            return NotImplemented
        return self.fingerprint() == other.fingerprint()

    def __hash__(self):
        return hash(self.fingerprint())

    def __repr__(self):
        return (
            f"IdealFrame(s={self.s}, mu={self.mu}, gamma={self.gamma}, "
            f"|frame|={len(self.frame)})"
        )

    # -- membership -----------------------------------------------------------

    def contains(self, alpha) -> bool:
        alpha = as_point(alpha)
        check_same_dim(alpha, self.mu)
        return cmin(alpha, self.gamma) in self.frame

    __contains__ = contains

    def contains_many(self, pts: np.ndarray) -> np.ndarray:
        """Vectorized membership for an (n, s) int array of points."""
        pts = np.asarray(pts, dtype=np.int64)
        if pts.ndim != 2 or pts.shape[1] != self.s:
            raise FrameError(f"expected an (n, {self.s}) array of points")
        gam = np.array(self.gamma, dtype=np.int64)
        mu = np.array(self.mu, dtype=np.int64)
        capped = np.minimum(pts, gam)
        valid = np.all(capped >= mu, axis=1)
        idx = np.clip(capped - mu, 0, None)
        out = np.zeros(len(pts), dtype=bool)
        if valid.any():
            arr = self._frame_bitmap()
            sel = idx[valid]
            out[valid] = arr[tuple(sel.T)]
        return out

    def membership_box(self, lo, hi) -> np.ndarray:
        """Membership bitmap over the box [lo, hi] (any corners in Z^s)."""
        lo = as_point(lo)
        hi = as_point(hi)
        check_same_dim(lo, self.mu)
        arr = self._frame_bitmap()
        s = self.s
        gathered_idx = []
        valid_total = None
        for i in range(s):
            coords = np.arange(lo[i], hi[i] + 1, dtype=np.int64)
            capped = np.minimum(coords, self.gamma[i])
            valid = capped >= self.mu[i]
            idx = np.clip(capped - self.mu[i], 0, arr.shape[i] - 1)
            gathered_idx.append(idx)
            shape = [1] * s
            shape[i] = len(coords)
            v = valid.reshape(shape)
            valid_total = v if valid_total is None else (valid_total & v)
        out = arr[np.ix_(*gathered_idx)] & valid_total
        return out

    def members_in_box(self, lo, hi) -> list[Point]:
        lo = as_point(lo)
        bm = self.membership_box(lo, hi)
        return [tuple(int(c) + l for c, l in zip(row, lo)) for row in np.argwhere(bm)]

    # -- derived data ----------------------------------------------------------

    @property
    def conductor(self) -> Point:
        """The minimal c with c + N^s contained in E (componentwise minimum
        over all such c; realized as an element of the conductor ideal
        whenever E satisfies (E1))."""
        if self._conductor is None:
            arr = self._frame_bitmap()
            above = arr
            for ax in range(self.s):
                above = _suffix_and(above, ax)
            cand = np.argwhere(above)
            mins = cand.min(axis=0)
            self._conductor = tuple(int(c) + m for c, m in zip(mins, self.mu))
        return self._conductor

    @property
    def tau(self) -> Point:
        return sub(self.conductor, ones(self.s))

    def shift(self, alpha) -> "IdealFrame":
        """The translate alpha + E (an ideal again, same validation status)."""
        alpha = as_point(alpha)
        check_same_dim(alpha, self.mu)
        out = IdealFrame(
            self.s,
            add(self.mu, alpha),
            add(self.gamma, alpha),
            [add(p, alpha) for p in self.frame],
            _normalized=True,
        )
        out._bitmap = self._frame_bitmap()
        if self._conductor is not None:
            out._conductor = add(self._conductor, alpha)
        for key, rep in self._report_cache.items():
            # Axiom status is translation invariant; witnesses are not, so
            # only clean reports travel with the shift.
            if rep.ok:
                out._report_cache[key] = rep
        return out

    def is_e1(self) -> bool:
        """Closure of the frame under componentwise min (axiom E1).

        Exact for the represented set: capping reduces any pair to a frame
        pair because cmin commutes with capping.
        """
        rep = self._report_cache.get("axioms")
        if rep is not None:
            return rep.e1_ok
        return not _e1_failures(self, first_only=True)


def _e1_failures(E: IdealFrame, first_only: bool = False) -> list[tuple[Point, Point]]:
    pts = np.array(E.frame_sorted, dtype=np.int64)
    n = len(pts)
    arr = E._frame_bitmap()
    mu = np.array(E.mu, dtype=np.int64)
    out = []
    block = max(1, 2_000_000 // max(n, 1))
    for start in range(0, n, block):
        chunk = pts[start : start + block]
        mins = np.minimum(chunk[:, None, :], pts[None, :, :])
        idx = mins - mu
        ok = arr[tuple(idx.reshape(-1, E.s).T)].reshape(len(chunk), n)
        bad = np.argwhere(~ok)
        for a, b in bad:
            p, q = tuple(chunk[a]), tuple(pts[b])
            if p < q:
                out.append((tuple(int(x) for x in p), tuple(int(x) for x in q)))
                if first_only:
                    return out
    return out


def _e2_failures(E: IdealFrame) -> list[tuple[Point, Point, int]]:
    """Exchange-axiom failures among frame pairs, with the witness search
    running over [mu, gamma+1] via the extension rule."""
    s = E.s
    mu = E.mu
    hi = add(E.gamma, ones(s))
    grid = E.membership_box(mu, hi)
    pts = np.array(E.frame_sorted, dtype=np.int64)
    mu_arr = np.array(mu, dtype=np.int64)
    tables: dict[tuple[int, int], np.ndarray] = {}

    def table(j: int, mask: int) -> np.ndarray:
        key = (j, mask)
        got = tables.get(key)
        if got is None:
            if mask == 0:
                got = _suffix_or_strict(grid, j)
            else:
                low = mask & -mask
                prev = table(j, mask & (mask - 1))
                others = [i for i in range(s) if i != j]
                axis = others[low.bit_length() - 1]
                got = _suffix_or(prev, axis)
            tables[key] = got
        return got

    failures: list[tuple[Point, Point, int]] = []
    for j in range(s):
        others = [i for i in range(s) if i != j]
        order = np.argsort(pts[:, j], kind="stable")
        sorted_pts = pts[order]
        values, starts = np.unique(sorted_pts[:, j], return_index=True)
        bounds = list(starts) + [len(sorted_pts)]
        for g in range(len(values)):
            G = sorted_pts[bounds[g] : bounds[g + 1]]
            k = len(G)
            for a in range(k - 1):
                rows = G[a + 1 :]
                m = np.minimum(G[a], rows)
                if others:
                    eq = rows[:, others] == G[a][others]
                    maskids = eq.astype(np.int64) @ (1 << np.arange(len(others)))
                else:
                    maskids = np.zeros(len(rows), dtype=np.int64)
                idx = m - mu_arr
                for mask in np.unique(maskids):
                    pick = maskids == mask
                    W = table(j, int(mask))
                    ok = W[tuple(idx[pick].T)]
                    if not ok.all():
                        sel = np.argwhere(pick).ravel()[~ok]
                        for t in sel:
                            failures.append(
                                (
                                    tuple(int(x) for x in G[a]),
                                    tuple(int(x) for x in rows[t]),
                                    j,
                                )
                            )
    return failures


def _additivity_failures(E: IdealFrame, S: IdealFrame) -> list[tuple[Point, Point]]:
    """Failures of E + S ⊆ E.

    Scanning e over the frame and sigma over S ∩ [0, max(gamma_S,
    gamma_E - mu_E) + 1] is exact for min-capped representations.
    """
    bound = add(cmax(S.gamma, sub(E.gamma, E.mu)), ones(E.s))
    sigmas = S.members_in_box(zero(E.s), bound)
    pts = np.array(E.frame_sorted, dtype=np.int64)
    out = []
    for sigma in sigmas:
        shifted = pts + np.array(sigma, dtype=np.int64)
        ok = E.contains_many(shifted)
        if not ok.all():
            for row in pts[~ok]:
                out.append((tuple(int(x) for x in row), sigma))
    return out


@dataclass
class ValidationReport:
    """Outcome of the axiom scans; failing checks carry witnesses."""

    e0_ok: bool
    e1_ok: bool
    e2_ok: bool
    additivity_ok: bool | None
    e1_failures: list = field(default_factory=list)
    e2_failures: list = field(default_factory=list)
    additivity_failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.e0_ok
            and self.e1_ok
            and self.e2_ok
            and self.additivity_ok is not False
        )

    def summary(self) -> str:
        def tag(v):
            return "pass" if v else "FAIL"

        lines = [
            f"E0 (conductor exists):        {tag(self.e0_ok)}",
            f"E1 (closed under min):        {tag(self.e1_ok)}",
            f"E2 (exchange axiom):          {tag(self.e2_ok)}",
        ]
        if self.additivity_ok is None:
            lines.append("ideal property (E+S in E):    not checked (no ambient)")
        else:
            lines.append(f"ideal property (E+S in E):    {tag(self.additivity_ok)}")
        for a, b in self.e1_failures[:3]:
            lines.append(f"  E1 witness: min of {a}, {b} is missing")
        for a, b, j in self.e2_failures[:3]:
            lines.append(f"  E2 witness: pair {a}, {b} agreeing in coordinate {j}")
        for e, sig in self.additivity_failures[:3]:
            lines.append(f"  ideal witness: {e} + {sig} is missing")
        for n in self.notes:
            lines.append(f"  note: {n}")
        return "\n".join(lines)


def _frame_of(S) -> IdealFrame:
    return S.ideal if isinstance(S, GoodSemigroup) else S


def validate(E: IdealFrame, S=None) -> ValidationReport:
    """Check the ideal/semigroup axioms on the finite representation.

    ``S`` (a GoodSemigroup or a raw IdealFrame) enables the E + S ⊆ E
    check; without it only (E0)-(E2) are examined.  All scans are exact
    for the represented set; see the per-check helpers for the boxes used.
    """
    E = _frame_of(E)
    Sf = _frame_of(S) if S is not None else None
    cache_key = "axioms" if Sf is None else ("full", Sf.fingerprint())
    got = E._report_cache.get(cache_key)
    if got is not None:
        return got

    ax = E._report_cache.get("axioms")
    if ax is not None:
        e1_fail, e2_fail = ax.e1_failures, ax.e2_failures
        notes = list(ax.notes)
    else:
        e1_fail = _e1_failures(E)
        e2_fail = _e2_failures(E)
        notes = []
        if E.conductor != E.gamma:
            notes.append(
                f"capping bound {E.gamma} exceeds the conductor {E.conductor}; "
                "the stored frame is definitional for this (non-good) set"
            )
        if e1_fail:
            notes.append("E2 was checked on the capped box only (E1 fails)")
    add_fail = None
    if Sf is not None:
        check_same_dim(E.mu, Sf.mu)
        add_fail = _additivity_failures(E, Sf)

    report = ValidationReport(
        e0_ok=True,  # gamma is in the frame, so gamma + N^s is in E by the rule
        e1_ok=not e1_fail,
        e2_ok=not e2_fail,
        additivity_ok=None if add_fail is None else not add_fail,
        e1_failures=e1_fail,
        e2_failures=e2_fail,
        additivity_failures=add_fail or [],
        notes=notes,
    )
    axiom_report = ValidationReport(
        e0_ok=True,
        e1_ok=report.e1_ok,
        e2_ok=report.e2_ok,
        additivity_ok=None,
        e1_failures=e1_fail,
        e2_failures=e2_fail,
        notes=notes,
    )
    E._report_cache["axioms"] = axiom_report
    E._report_cache[cache_key] = report
    return report


class GoodSemigroup:
    """A validated good semigroup: an IdealFrame with mu = 0 certified to
    satisfy (E0)-(E2) and closure under addition."""

    __slots__ = ("ideal",)

    def __init__(self, ideal: IdealFrame):
        if ideal.mu != zero(ideal.s):
            raise NotCertifiedError(f"a semigroup must have minimum 0, got mu={ideal.mu}")
        report = validate(ideal, ideal)
        if not report.ok:
            raise NotCertifiedError(
                "the frame does not define a good semigroup:\n" + report.summary(),
                report,
            )
        self.ideal = ideal

    @classmethod
    def from_points(cls, points, gamma) -> "GoodSemigroup":
        return cls(IdealFrame.from_points(points, gamma))

    @property
    def s(self) -> int:
        return self.ideal.s

    @property
    def gamma(self) -> Point:
        return self.ideal.gamma

    @property
    def tau(self) -> Point:
        return sub(self.ideal.gamma, ones(self.ideal.s))

    def contains(self, alpha) -> bool:
        return self.ideal.contains(alpha)

    __contains__ = contains

    def __eq__(self, other):
        if not isinstance(other, GoodSemigroup):
            return NotImplemented
        return self.ideal == other.ideal

    def __hash__(self):
        return hash(("GoodSemigroup", self.ideal.fingerprint()))

    def __repr__(self):
        return f"GoodSemigroup(s={self.s}, gamma={self.gamma}, |frame|={len(self.ideal.frame)})"


# -- arithmetic on frames -----------------------------------------------------


def sum_ideals(E: IdealFrame, F: IdealFrame, S=None) -> IdealFrame:
    """The pointwise sum E + F = {e + f}.

    Exactly representable with capping bound gamma_E + gamma_F (then
    minimized).  Any sum landing in the scan box [mu_E+mu_F, hi] has its
    F-part inside [mu_F, hi - mu_E], so the scan must range over the
    members of F up to cmax(gamma_F, hi - mu_E) — the frame box of F
    alone misses sums whose F-part lies beyond gamma_F while the E-part
    is small.  ``S`` is accepted for signature compatibility, unused.
    """
    del S
    check_same_dim(E.mu, F.mu)
    lo = add(E.mu, F.mu)
    hi = add(E.gamma, F.gamma)
    out = np.zeros(tuple(h - l + 1 for l, h in zip(lo, hi)), dtype=bool)
    for f in F.members_in_box(F.mu, cmax(F.gamma, sub(hi, E.mu))):
        out |= E.membership_box(sub(lo, f), sub(hi, f))
    return IdealFrame._from_bitmap(lo, out)


def is_subset(E: IdealFrame, F: IdealFrame) -> bool:
    """Set inclusion E ⊆ F, decided exactly on the joint box."""
    check_same_dim(E.mu, F.mu)
    lo = cmin(E.mu, F.mu)
    hi = cmax(E.gamma, F.gamma)
    Em = E.membership_box(lo, hi)
    Fm = F.membership_box(lo, hi)
    return bool(np.all(Fm | ~Em))


# -- locality and decomposition ----------------------------------------------


def is_local(S) -> bool:
    """True iff the only element of S with a zero coordinate is 0.

    Scans S ∩ [0, gamma+1]; capping at gamma+1 preserves zero-patterns, so
    the scan is exact.
    """
    Sf = _frame_of(S)
    members = np.array(
        Sf.members_in_box(zero(Sf.s), add(Sf.gamma, ones(Sf.s))), dtype=np.int64
    )
    nonzero = members.any(axis=1)
    has_zero_coord = (members == 0).any(axis=1)
    return not bool((nonzero & has_zero_coord).any())


@dataclass(frozen=True)
class LocalDecomposition:
    """Partition of the branch set with one local factor per block."""

    partition: tuple[tuple[int, ...], ...]
    factors: tuple[GoodSemigroup, ...]

    def recombine(self) -> GoodSemigroup:
        return recombine(self.partition, self.factors)


def decompose(S: GoodSemigroup) -> LocalDecomposition:
    """Split S into its product of local factors.

    Branches i, j share a block iff every element of S vanishes at i
    exactly when it vanishes at j (scanned on [0, gamma+1], which is
    exact); the factors are the projections onto the blocks.
    """
    Sf = _frame_of(S)
    s = Sf.s
    hi = add(Sf.gamma, ones(s))
    members = np.array(Sf.members_in_box(zero(s), hi), dtype=np.int64)
    zpat = members == 0
    blocks: list[list[int]] = []
    seen: dict[bytes, int] = {}
    for i in range(s):
        key = zpat[:, i].tobytes()
        if key in seen:
            blocks[seen[key]].append(i)
        else:
            seen[key] = len(blocks)
            blocks.append([i])
    blocks_t = tuple(tuple(b) for b in blocks)

    factors = []
    for block in blocks_t:
        gb = tuple(Sf.gamma[i] for i in block)
        shape = tuple(g + 1 for g in gb)
        grid = np.indices(shape).reshape(len(block), -1).T
        embedded = np.empty((len(grid), s), dtype=np.int64)
        for col in range(s):
            embedded[:, col] = Sf.gamma[col] + 1
        for k, i in enumerate(block):
            embedded[:, i] = grid[:, k]
        mem = Sf.contains_many(embedded).reshape(shape)
        factor_frame = IdealFrame._from_bitmap(zero(len(block)), mem)
        factor = GoodSemigroup(factor_frame)
        if not is_local(factor):
            raise FrameError(
                f"projection onto branches {block} is not local; "
                "the zero-pattern partition is inconsistent"
            )
        factors.append(factor)
    return LocalDecomposition(blocks_t, tuple(factors))


def recombine(partition, factors) -> GoodSemigroup:
    """Cartesian recombination of factor semigroups along a partition of
    the branch indices (inverse of :func:`decompose`)."""
    blocks = [tuple(b) for b in partition]
    s = sum(len(b) for b in blocks)
    if sorted(i for b in blocks for i in b) != list(range(s)):
        raise FrameError(f"partition {blocks} does not cover 0..{s - 1}")
    frames = [_frame_of(f) for f in factors]
    if len(frames) != len(blocks):
        raise FrameError("one factor per block required")
    gamma = [0] * s
    for block, f in zip(blocks, frames):
        if f.s != len(block):
            raise FrameError(f"factor dimension {f.s} != block size {len(block)}")
        for k, i in enumerate(block):
            gamma[i] = f.gamma[k]
    pts_arrays = [np.array(f.frame_sorted, dtype=np.int64) for f in frames]
    combo = pts_arrays[0]
    placed = np.zeros((len(combo), s), dtype=np.int64)
    for k, i in enumerate(blocks[0]):
        placed[:, i] = combo[:, k]
    for b in range(1, len(blocks)):
        nxt = pts_arrays[b]
        rep = np.repeat(placed, len(nxt), axis=0)
        tiled = np.tile(nxt, (len(placed), 1))
        for k, i in enumerate(blocks[b]):
            rep[:, i] = tiled[:, k]
        placed = rep
    pts = [tuple(int(x) for x in row) for row in placed]
    return GoodSemigroup(IdealFrame(s, zero(s), tuple(gamma), pts))


def product_semigroups(*factors) -> GoodSemigroup:
    """Product semigroup on consecutive branch blocks."""
    blocks = []
    at = 0
    for f in factors:
        sf = _frame_of(f).s
        blocks.append(tuple(range(at, at + sf)))
        at += sf
    return recombine(blocks, factors)


# -- JSON serialization --------------------------------------------------------


def to_json(E: IdealFrame) -> str:
    """Canonical JSON text: keys s/mu/gamma/frame, frame lex-sorted, one
    frame point per line.  Byte-stable."""
    E = _frame_of(E)
    lines = [
        "{",
        f'  "s": {E.s},',
        f'  "mu": {list(E.mu)},',
        f'  "gamma": {list(E.gamma)},',
        '  "frame": [',
    ]
    pts = E.frame_sorted
    for k, p in enumerate(pts):
        comma = "," if k + 1 < len(pts) else ""
        lines.append(f"    {list(p)}{comma}")
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def from_json(text: str, filename=None) -> IdealFrame:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, col=exc.colno, filename=filename) from exc
    if not isinstance(obj, dict):
        raise ParseError("expected a JSON object", filename=filename)
    keys = {"s", "mu", "gamma", "frame"}
    if set(obj) != keys:
        raise ParseError(
            f"expected exactly the keys {sorted(keys)}, got {sorted(obj)}", filename=filename
        )
    try:
        return IdealFrame(obj["s"], obj["mu"], obj["gamma"], obj["frame"])
    except (FrameError, TypeError, ValueError) as exc:
        raise ParseError(str(exc), filename=filename) from exc
