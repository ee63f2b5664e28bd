"""Duality for good semigroups: ideal differences and canonical ideals.

The central operation is the difference E - F = {x : x + F ⊆ E}.  Applied
with a canonical ideal K on the left it realizes the duality E ↦ K - E,
which is an inclusion-reversing involution on good ideals.  The normalized
canonical ideal K⁰ of S is computed directly from its defining property:
alpha lies in K⁰ iff no element of S agrees with tau - alpha in some
coordinate while strictly dominating it elsewhere (tau = conductor - 1).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import FrameError, InclusionError, NotCertifiedError
from .ideals import (
    GoodSemigroup,
    IdealFrame,
    LocalDecomposition,
    _frame_of,
    is_subset,
    validate,
)
from .lattice import Point, add, as_point, check_same_dim, cmax, cmin, ones, sub, zero

__all__ = [
    "difference",
    "conductor_ideal",
    "canonical_normalized",
    "is_canonical",
    "is_symmetric",
    "CanonicalIdeal",
    "dualize",
    "push_forward",
    "product_canonical",
]


def _suffix_or_strict(a: np.ndarray, axis: int) -> np.ndarray:
    inc = np.flip(np.logical_or.accumulate(np.flip(a, axis), axis=axis), axis)
    out = np.zeros_like(a)
    src = [slice(None)] * a.ndim
    dst = [slice(None)] * a.ndim
    src[axis] = slice(1, None)
    dst[axis] = slice(0, -1)
    out[tuple(dst)] = inc[tuple(src)]
    return out


def _correlate_counts(big: np.ndarray, kernel: np.ndarray) -> np.ndarray:
    """Valid-mode cross-correlation of 0/1 arrays, exact integer counts.

    out[x] = sum over v of kernel[v] * big[x + v].  Computed by FFT; the
    counts are small integers, so rounding is exact (asserted).
    """
    full = tuple(b + k - 1 for b, k in zip(big.shape, kernel.shape))
    axes = tuple(range(big.ndim))
    B = np.fft.rfftn(big.astype(np.float64), full, axes=axes)
    K = np.fft.rfftn(np.flip(kernel).astype(np.float64), full, axes=axes)
    conv = np.fft.irfftn(B * K, full, axes=axes)
    sl = tuple(slice(k - 1, b) for b, k in zip(big.shape, kernel.shape))
    out = conv[sl]
    rounded = np.rint(out)
    if not np.allclose(out, rounded, atol=1e-6):
        raise ArithmeticError("FFT correlation counts failed to round cleanly")
    return rounded.astype(np.int64)


def difference(E: IdealFrame, F: IdealFrame) -> IdealFrame:
    """E - F = {x in Z^s : x + F ⊆ E}.

    Both arguments must be closed under componentwise min (E1); the result
    then is as well, and is exactly representable with capping bound
    gamma_E - mu_F.  Witnesses f are scanned over F ∩ [mu_F, B] with
    B = max(gamma_F, gamma_E - mu_E + mu_F), which decides membership for
    every candidate.
    """
    check_same_dim(E.mu, F.mu)
    for name, X in (("left", E), ("right", F)):
        if not X.is_e1():
            raise NotCertifiedError(
                f"difference requires (E1) on the {name} argument; "
                "it fails closure under componentwise min"
            )
    xlo = sub(E.mu, F.mu)
    xhi = sub(E.gamma, F.mu)
    fhi = cmax(F.gamma, add(sub(E.gamma, E.mu), F.mu))
    fmask = F.membership_box(F.mu, fhi)
    window = E.membership_box(add(xlo, F.mu), add(xhi, fhi))
    misses = _correlate_counts(~window, fmask)
    return IdealFrame._from_bitmap(xlo, misses == 0)


def conductor_ideal(E: IdealFrame) -> IdealFrame:
    """The translated orthant gamma_E + N^s as an ideal frame."""
    c = _frame_of(E).conductor
    return IdealFrame(len(c), c, c, [c], _normalized=True)


def canonical_normalized(S: GoodSemigroup) -> IdealFrame:
    """The normalized canonical ideal K⁰ of S.

    alpha ∈ K⁰ iff for every coordinate j there is no sigma in S with
    sigma_j = tau_j - alpha_j and sigma_i > tau_i - alpha_i for all other
    i.  Witnesses sigma are complete inside S ∩ [0, gamma+1]; the bitmap
    over [0, gamma] is exact at gamma.
    """
    Sf = _frame_of(S)
    s = Sf.s
    gamma = Sf.gamma
    lo = tuple(-1 for _ in range(s))
    M = Sf.membership_box(lo, add(gamma, ones(s)))
    shape = tuple(g + 1 for g in gamma)
    bad = np.zeros(shape, dtype=bool)
    for j in range(s):
        D = M
        for i in range(s):
            if i != j:
                D = _suffix_or_strict(D, i)
        # beta = tau - alpha for alpha in [0, gamma]: grid index tau-alpha+1,
        # i.e. the reversed leading block of D.
        sl = tuple(slice(0, g + 1) for g in gamma)
        bad |= np.flip(D[sl])
    return IdealFrame._from_bitmap(zero(s), ~bad)


def is_canonical(K: IdealFrame, S: GoodSemigroup) -> tuple[bool, Point]:
    """Decide whether K is a canonical ideal of S, i.e. a translate of K⁰.

    Returns (verdict, alpha) with alpha = conductor(K) - gamma(S), the only
    possible translation; the verdict compares K against K⁰ + alpha as sets.
    """
    Sf = _frame_of(S)
    check_same_dim(K.mu, Sf.mu)
    K0 = canonical_normalized(S)
    alpha = sub(K.conductor, Sf.gamma)
    return (K == K0.shift(alpha), alpha)


def is_symmetric(S: GoodSemigroup) -> bool:
    """S is symmetric iff S itself is one of its canonical ideals."""
    return is_canonical(_frame_of(S), S)[0]


@dataclass(frozen=True)
class CanonicalIdeal:
    """A certified canonical ideal over its semigroup.

    Instances are produced by :meth:`certify` (or :meth:`normalized`),
    which verifies the translate property and records the shift.
    """

    ideal: IdealFrame
    semigroup: GoodSemigroup
    shift_from_normalized: Point

    @classmethod
    def certify(cls, ideal: IdealFrame, semigroup: GoodSemigroup) -> "CanonicalIdeal":
        verdict, alpha = is_canonical(ideal, semigroup)
        if not verdict:
            raise NotCertifiedError(
                f"the frame with conductor {ideal.conductor} is not a translate "
                "of the normalized canonical ideal"
            )
        return cls(ideal, semigroup, alpha)

    @classmethod
    def normalized(cls, semigroup: GoodSemigroup) -> "CanonicalIdeal":
        K0 = canonical_normalized(semigroup)
        return cls(K0, semigroup, zero(K0.s))

    @property
    def s(self) -> int:
        return self.ideal.s


def dualize(K: CanonicalIdeal, E: IdealFrame) -> IdealFrame:
    """The dual K - E of a good ideal E with respect to a canonical ideal.

    E must be certified as a good ideal of K's semigroup; on such inputs
    the map is an involution and K - E is good again.  An uncertified E is
    rejected: a plain difference can still be formed, but applying it twice
    is then not guaranteed to return E.
    """
    if not isinstance(K, CanonicalIdeal):
        raise NotCertifiedError("dualize requires a certified CanonicalIdeal on the left")
    report = validate(E, K.semigroup)
    if not report.ok:
        raise NotCertifiedError(
            "input not (E2)-certified; involution not guaranteed:\n" + report.summary(),
            report,
        )
    return difference(K.ideal, E)


def push_forward(K: CanonicalIdeal, Sp: GoodSemigroup) -> CanonicalIdeal:
    """Transport a canonical ideal of S to one of an oversemigroup S ⊆ S'.

    The result is K - S' (difference taken in Z^s), certified canonical
    over S' before being returned.
    """
    S = K.semigroup
    check_same_dim(_frame_of(S).mu, _frame_of(Sp).mu)
    if not is_subset(_frame_of(S), _frame_of(Sp)):
        raise InclusionError("push_forward requires S ⊆ S'")
    moved = difference(K.ideal, _frame_of(Sp))
    return CanonicalIdeal.certify(moved, Sp)


def product_canonical(decomp: LocalDecomposition) -> IdealFrame:
    """Normalized canonical ideal of a product, assembled factorwise.

    K⁰ of the recombined semigroup equals the product of the factors'
    K⁰s, interleaved along the partition.
    """
    frames = [canonical_normalized(f) for f in decomp.factors]
    blocks = [tuple(b) for b in decomp.partition]
    s = sum(len(b) for b in blocks)
    if sorted(i for b in blocks for i in b) != list(range(s)):
        raise FrameError(f"partition {blocks} does not cover 0..{s - 1}")
    gamma = [0] * s
    mu = [0] * s
    for block, f in zip(blocks, frames):
        for k, i in enumerate(block):
            gamma[i] = f.gamma[k]
            mu[i] = f.mu[k]
    first = np.array(frames[0].frame_sorted, dtype=np.int64)
    placed = np.zeros((len(first), s), dtype=np.int64)
    for k, i in enumerate(blocks[0]):
        placed[:, i] = first[:, k]
    for b in range(1, len(blocks)):
        nxt = np.array(frames[b].frame_sorted, dtype=np.int64)
        rep = np.repeat(placed, len(nxt), axis=0)
        tiled = np.tile(nxt, (len(placed), 1))
        for k, i in enumerate(blocks[b]):
            rep[:, i] = tiled[:, k]
        placed = rep
    pts = [tuple(int(x) for x in row) for row in placed]
    return IdealFrame(s, tuple(mu), tuple(gamma), pts)
