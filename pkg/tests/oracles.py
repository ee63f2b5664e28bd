"""Slow reference implementations used to pin expected values.

Everything in this file works on explicit point sets, membership
predicates, or dense rational matrices over finite windows.  Nothing
here imports the library under test.  Window sufficiency notes:

* delta / k0: a witness sigma of Delta(beta) can be min-capped to the
  capping bound gamma whenever beta < gamma componentwise, so scanning
  members inside [lo, gamma] is exhaustive for those beta.
* difference: for x in the candidate window, any f in F with
  x + f in the scan box satisfies f <= hi_E - x, so a generous F window
  [mu_F, cmax(gamma_F, hi_E - lo_X)] is exhaustive.
"""

import itertools
from fractions import Fraction


def box(lo, hi):
    """All integer points of the closed box [lo, hi], lex order."""
    return itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi)))


def cmin(a, b):
    return tuple(map(min, a, b))


def cmax(a, b):
    return tuple(map(max, a, b))


def leq(a, b):
    return all(x <= y for x, y in zip(a, b))


def lt(a, b):
    return leq(a, b) and a != b


def add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def points_of(pred, lo, hi):
    return {p for p in box(lo, hi) if pred(p)}


# ----------------------------------------------------------------- axioms


def min_closed(pts):
    """True when the explicit set is closed under componentwise min."""
    P = set(pts)
    return all(cmin(p, q) in P for p in P for q in P)


def exchange_violations(pts, pred, witness_hi):
    """Pairs (a, b, j) with a_j == b_j admitting no exchange witness.

    ``pts`` are the pairs scanned; witnesses are searched among the
    predicate's members in [componentwise-min of the pair, witness_hi].
    """
    P = sorted(set(pts))
    s = len(witness_hi)
    bad = []
    for a in P:
        for b in P:
            if a >= b:
                continue
            for j in range(s):
                if a[j] != b[j]:
                    continue
                lo = cmin(a, b)
                found = False
                for eps in box(lo, witness_hi):
                    if not pred(eps) or eps[j] <= a[j]:
                        continue
                    ok = True
                    for i in range(s):
                        if i == j:
                            continue
                        if a[i] != b[i]:
                            if eps[i] != min(a[i], b[i]):
                                ok = False
                                break
                        elif eps[i] < a[i]:
                            ok = False
                            break
                    if ok:
                        found = True
                        break
                if not found:
                    bad.append((a, b, j))
    return bad


# ------------------------------------------------------- Delta sets and K0


def delta(pred, beta, lo, hi):
    """Members sigma with sigma_j == beta_j for some j and sigma_i > beta_i
    for every other i, scanned over [lo, hi]."""
    s = len(beta)
    out = set()
    for sigma in box(lo, hi):
        if not pred(sigma):
            continue
        for j in range(s):
            if sigma[j] == beta[j] and all(
                sigma[i] > beta[i] for i in range(s) if i != j
            ):
                out.add(sigma)
                break
    return out


def k0_points(pred_s, gamma, lo, hi):
    """The normalized canonical set {alpha : Delta(tau - alpha) is empty},
    tau = gamma - 1, computed pointwise over [lo, hi].  Every tau - alpha
    with alpha >= 0 is < gamma componentwise, so the member scan box
    [zero, gamma] is exhaustive."""
    s = len(gamma)
    tau = tuple(g - 1 for g in gamma)
    zero = (0,) * s
    out = set()
    for alpha in box(lo, hi):
        beta = sub(tau, alpha)
        if not delta(pred_s, beta, cmin(zero, beta), gamma):
            out.add(alpha)
    return out


# ----------------------------------------------------- difference and sum


def difference_points(pred_e, pred_f, lo_x, hi_x, f_lo, f_hi):
    """{x in [lo_x, hi_x] : x + f in E for all f in F cap [f_lo, f_hi]}."""
    fs = points_of(pred_f, f_lo, f_hi)
    return {
        x for x in box(lo_x, hi_x) if all(pred_e(add(x, f)) for f in fs)
    }


def sum_points(pred_e, pred_f, lo, hi, e_lo, f_lo):
    """(E + F) cap [lo, hi] for E bounded below by e_lo and F by f_lo.

    Any sum landing in the box has e <= hi - f_lo and f <= hi - e_lo,
    so the two scans below are exhaustive.
    """
    out = set()
    es = points_of(pred_e, e_lo, sub(hi, f_lo))
    fs = points_of(pred_f, f_lo, sub(hi, e_lo))
    for e in es:
        for f in fs:
            p = add(e, f)
            if leq(lo, p) and leq(p, hi):
                out.add(p)
    return out


# ----------------------------------------------------------------- chains


def members_between(pred, a, b):
    return [p for p in box(a, b) if pred(p)]


def covers(pred, a, b):
    """Members c with a < c <= b such that no member lies strictly
    between a and c."""
    pts = set(members_between(pred, a, b))
    out = []
    for c in pts:
        if not lt(a, c):
            continue
        if any(lt(a, d) and lt(d, c) for d in pts):
            continue
        out.append(c)
    return out


def chain_lengths(pred, a, b, cap=100000):
    """Lengths of all saturated chains from a to b inside the member set.

    Raises RuntimeError past ``cap`` explored chains.
    """
    lengths = set()
    count = 0
    stack = [(a, 0)]
    while stack:
        cur, n = stack.pop()
        count += 1
        if count > cap:
            raise RuntimeError("chain cap exceeded")
        if cur == b:
            lengths.add(n)
            continue
        for c in covers(pred, cur, b):
            stack.append((c, n + 1))
    return lengths


# ---------------------------------------------- dense exact linear algebra


def rref(rows):
    """Dense row reduction over Fraction lists; returns (rank, rows)."""
    mat = [list(map(Fraction, r)) for r in rows]
    if not mat:
        return 0, []
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank, mat[:rank]


def poly_mul_mod(a, b, N):
    """Multiply coefficient lists modulo t^N."""
    out = [Fraction(0)] * N
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if i + j >= N:
                break
            out[i + j] += x * y
    return out


def vec_mul_mod(v, g, N):
    """Branchwise product of two dense vectors (lists of coeff lists)."""
    return [poly_mul_mod(a, b, N) for a, b in zip(v, g)]


def flatten(v):
    return [c for branch in v for c in branch]


def dense_vec(poly_branches, s, N):
    """Dense vector from {exp: coeff} dicts, exponents >= N dropped."""
    out = []
    for i in range(s):
        col = [Fraction(0)] * N
        for e, c in poly_branches[i].items():
            if e < N:
                col[e] += Fraction(c)
        out.append(col)
    return out


def span_rows(ring_gens, module_gens, s, N):
    """Closure of the module generators under ring multiplication,
    returned as reduced dense rows of length s*N.  Worklist closure with
    dense rank checks; independent of the library's sparse engine."""
    one = [[Fraction(0)] * N for _ in range(s)]
    for i in range(s):
        one[i][0] = Fraction(1)
    gens = [dense_vec(g, s, N) for g in ring_gens]
    work = [dense_vec(m, s, N) for m in module_gens]
    rank, rows = 0, []
    while work:
        v = work.pop()
        cand = rows + [flatten(v)]
        r2, red = rref(cand)
        if r2 == rank:
            continue
        rank, rows = r2, red
        for g in gens:
            work.append(vec_mul_mod(v, g, N))
    return rows


def dim_with_floor(rows, s, N, alpha):
    """dim of {v in rowspace : v_i vanishes below alpha_i on each branch}.

    Computed as (#rows) - rank(rows restricted to the forbidden columns).
    """
    forbidden = [
        i * N + e for i in range(s) for e in range(min(max(alpha[i], 0), N))
    ]
    if not rows:
        return 0
    restricted = [[r[c] for c in forbidden] for r in rows]
    rank, _ = rref(restricted)
    return len(rows) - rank


def in_value_set(rows, s, N, alpha):
    """alpha lies in the value set iff, for every branch i, clamping the
    floor one step higher on branch i strictly drops the dimension."""
    base = dim_with_floor(rows, s, N, alpha)
    for i in range(s):
        up = list(alpha)
        up[i] += 1
        if dim_with_floor(rows, s, N, tuple(up)) == base:
            return False
    return True


def numerical_members(gens, hi):
    """Members of the numerical semigroup generated by ``gens`` up to hi,
    by coin-problem dynamic programming."""
    reach = [False] * (hi + 1)
    reach[0] = True
    for g in gens:
        for n in range(g, hi + 1):
            if reach[n - g]:
                reach[n] = True
    return {n for n, r in enumerate(reach) if r}
