"""Brute-force checkers for the auxiliary lemmas and for the Phi-set used on the family.

Each ``check_*`` function decides a single instance and returns True when the
lemma's statement agrees with exhaustive counting.  The ``*_suite`` functions
sweep a whole domain (exhaustively or with a seeded sample) and collect
failures in a :class:`LemmaResult`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .field import DomainError, FieldCtx, make_field
from .niho import NihoParams
from .spectra import PowerFunction, ddt_row


@dataclass
class LemmaResult:
    name: str
    n: int
    checked: int = 0
    failures: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> int:
        return self.checked - len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, case) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(case)


def subfield_of_degree(ctx: FieldCtx, e: int) -> np.ndarray:
    """GF(2^e) inside GF(2^n), sorted; needs e | n."""
    if ctx.n % e:
        raise DomainError(f"GF(2^{e}) is not a subfield of GF(2^{ctx.n})")
    step = (ctx.order - 1) // ((1 << e) - 1)
    nz = ctx.exp_table[np.arange(0, ctx.order - 1, step)].astype(np.int64)
    return np.sort(np.concatenate([[0], nz]))


# -- Lemma 1: x -> (x + conj(theta)) / (x + theta) ----------------------------


def check_lemma1(ctx: FieldCtx, theta: int) -> bool:
    if ctx.in_subfield(theta):
        raise DomainError(f"theta = {theta} lies in the subfield")
    tbar = ctx.conjugate(theta)
    image = set()
    for x in ctx.subfield_elements():
        x = int(x)
        image.add(ctx.div(x ^ tbar, x ^ theta))
    target = {int(v) for v in ctx.unit_circle()} - {1}
    return len(image) == 1 << ctx.m and image == target


def lemma1_suite(ctx: FieldCtx) -> LemmaResult:
    res = LemmaResult("lemma1", ctx.n)
    sub = ctx.subfield_elements()
    target = np.setdiff1d(ctx.unit_circle(), [1])
    conj = ctx.vconjugate(np.arange(ctx.order))
    for theta in range(ctx.order):
        if conj[theta] == theta:
            continue
        num = sub ^ conj[theta]
        den = sub ^ theta
        image = ctx.vmul(num, ctx.vinv(den))
        ok = len(np.unique(image)) == len(sub) and np.array_equal(np.sort(image), target)
        res.record(bool(ok), theta)
    return res


# -- Lemma 2: x^2 + a x + b with both roots on the unit circle -----------------


def lemma2_criterion(ctx: FieldCtx, a: int, b: int, absolute_trace: bool = False) -> bool:
    """b == a^(1 - 2^m) and Tr(b / a^2) == 1.

    The trace is the subfield trace Tr_1^m.  ``absolute_trace=True`` uses
    Tr_1^n instead; since b / a^2 = 1 / (a conj(a)) lies in GF(2^m) whenever
    the first condition holds, that variant is identically false.
    """
    if b != ctx.div(a, ctx.conjugate(a)):
        return False
    r = ctx.div(b, ctx.mul(a, a))
    if absolute_trace:
        return ctx.trace_abs(r) == 1
    return ctx.subfield_trace(r) == 1


def check_lemma2(ctx: FieldCtx, a: int, b: int, absolute_trace: bool = False) -> bool:
    ctx._need_even()
    if a == 0 or b == 0:
        raise DomainError("a and b must be nonzero")
    roots = sum(1 for y in ctx.unit_circle() if ctx.mul(int(y), int(y) ^ a) == b)
    return (roots == 2) == lemma2_criterion(ctx, a, b, absolute_trace)


def lemma2_suite(ctx: FieldCtx, absolute_trace: bool = False) -> LemmaResult:
    res = LemmaResult("lemma2", ctx.n)
    m = ctx._need_even()
    mu = ctx.unit_circle()
    q = ctx.order
    elems = np.arange(q)
    res.notes["two_root_cases"] = 0
    for a in range(1, q):
        # y^2 + a y = b  <=>  y is a root of x^2 + a x + b
        counts = np.bincount(ctx.vmul(mu, mu ^ a), minlength=q)
        abar = ctx.conjugate(a)
        target_b = ctx.div(a, abar)
        crit = np.zeros(q, dtype=bool)
        r = ctx.div(target_b, ctx.mul(a, a))
        if absolute_trace:
            crit[target_b] = ctx.trace_abs(r) == 1
        else:
            crit[target_b] = ctx.subfield_trace(r) == 1
        two = counts == 2
        res.notes["two_root_cases"] += int(two[1:].sum())
        bad = elems[1:][two[1:] != crit[1:]]
        res.checked += q - 1
        res.failures.extend((a, int(b)) for b in bad)
    return res


# -- Lemma 3: x^(2^r) + x = a --------------------------------------------------


def check_lemma3(ctx: FieldCtx, r: int, a: int) -> bool:
    if gcd(r, ctx.n) != 1:
        raise DomainError(f"gcd(r, n) = gcd({r}, {ctx.n}) != 1")
    count = sum(1 for x in ctx.elements() if ctx.frobenius(x, r) ^ x == a)
    return count == (2 if ctx.trace_abs(a) == 0 else 0)


def lemma3_suite(ctx: FieldCtx) -> LemmaResult:
    res = LemmaResult("lemma3", ctx.n)
    x = np.arange(ctx.order)
    expected = np.where(ctx.vtrace(x) == 0, 2, 0)
    for r in range(1, ctx.n):
        if gcd(r, ctx.n) != 1:
            continue
        counts = np.bincount(ctx.vpow(x, 2**r) ^ x, minlength=ctx.order)
        res.checked += ctx.order
        res.failures.extend((r, int(a)) for a in np.flatnonzero(counts != expected))
    return res


# -- Lemma 4: expansion of x^(2^k+1) + y^(2^k+1) -------------------------------


def check_lemma4(ctx: FieldCtx, k: int, x: int, y: int) -> bool:
    """Both sides of the identity agree.

    Every exponent 2^k - 2^(i+1) + 1 with 0 <= i < k is at least 1, so the
    right-hand side never needs 0^0, even when x = y.
    """
    if k < 1:
        raise DomainError("k must be >= 1")
    e = 2**k + 1
    lhs = ctx.pow(x, e) ^ ctx.pow(y, e)
    s = x ^ y
    xy = ctx.mul(x, y)
    rhs = ctx.pow(s, e)
    for i in range(k):
        rhs ^= ctx.mul(ctx.frobenius(xy, i), ctx.pow(s, 2**k - 2 ** (i + 1) + 1))
    return lhs == rhs


def lemma4_suite(ctx: FieldCtx, samples: int, seed: int, max_k: int | None = None) -> LemmaResult:
    res = LemmaResult("lemma4", ctx.n)
    rng = random.Random(f"lemma4:{ctx.n}:{seed}")
    max_k = max_k or 2 * ctx.n
    for _ in range(samples):
        k = rng.randint(1, max_k)
        x = rng.randrange(ctx.order)
        y = rng.randrange(ctx.order)
        res.record(check_lemma4(ctx, k, x, y), (k, x, y))
    return res


# -- Lemma 5: roots of x^(2^r+1) + a x^(2^r) + b x + c -------------------------


def _q_values(ctx: FieldCtx, r: int, a: int, b: int, c: int, xs: np.ndarray) -> np.ndarray:
    xr = ctx.vpow(xs, 2**r)
    return ctx.vmul(xr, xs) ^ ctx.vmul(xr, a) ^ ctx.vmul(xs, b) ^ c


def lemma5_root_count(ctx: FieldCtx, r: int, a: int, b: int, c: int) -> int:
    xs = np.arange(ctx.order)
    return int(np.count_nonzero(_q_values(ctx, r, a, b, c, xs) == 0))


def check_lemma5(ctx: FieldCtx, r: int, a: int, b: int, c: int) -> bool:
    if r < 1:
        raise DomainError("r must be >= 1")
    n = ctx.n
    r0 = gcd(r, n)
    xs = np.arange(ctx.order)
    roots = xs[_q_values(ctx, r, a, b, c, xs) == 0]
    if len(roots) not in (0, 1, 2, 2**r0 + 1):
        return False
    if n % 2:
        return True
    m = n // 2
    mu = ctx.unit_circle()
    mu_roots = np.intersect1d(roots, mu)
    if len(mu_roots) < 3:
        return True
    r1 = gcd(r0, m)
    if len(mu_roots) != 2**r1 + 1:
        return False
    x0, x1, x2 = (int(v) for v in mu_roots[:3])
    rest = {int(v) for v in mu_roots[3:]}
    params = set()
    for A in subfield_of_degree(ctx, r1):
        A = int(A)
        den = x0 ^ ctx.mul(A, x1) ^ ctx.mul(A ^ 1, x2)
        if den == 0:
            return False
        if A in (0, 1):
            continue
        num = ctx.mul(x1, x2) ^ ctx.mul(A, ctx.mul(x0, x2)) ^ ctx.mul(A ^ 1, ctx.mul(x0, x1))
        params.add(ctx.div(num, den))
    return rest <= params


def _solve3(ctx: FieldCtx, rows: list[list[int]]) -> list[int] | None:
    """Gauss-Jordan on a 3x4 augmented matrix over the field; None if singular."""
    M = [row[:] for row in rows]
    for col in range(3):
        piv = next((i for i in range(col, 3) if M[i][col]), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        inv = ctx.inv(M[col][col])
        M[col] = [ctx.mul(inv, v) for v in M[col]]
        for i in range(3):
            if i != col and M[i][col]:
                f = M[i][col]
                M[i] = [v ^ ctx.mul(f, w) for v, w in zip(M[i], M[col])]
    return [M[i][3] for i in range(3)]


def three_circle_root_instance(ctx: FieldCtx, r: int, rng: random.Random) -> tuple[int, int, int] | None:
    """(a, b, c) such that Q has three prescribed distinct roots on the unit circle."""
    mu = [int(v) for v in ctx.unit_circle()]
    ys = rng.sample(mu, 3)
    rows = []
    for y in ys:
        yr = ctx.frobenius(y, r)
        rows.append([yr, y, 1, ctx.mul(yr, y)])
    return _solve3(ctx, rows)


def lemma5_suite(ctx: FieldCtx, samples: int, seed: int, structured: int | None = None) -> LemmaResult:
    """Uniform random (r, a, b, c), plus (for even n) instances with three roots on the unit circle."""
    res = LemmaResult("lemma5", ctx.n)
    rng = random.Random(f"lemma5:{ctx.n}:{seed}")
    for _ in range(samples):
        r = rng.randint(1, 2 * ctx.n)
        a, b, c = (rng.randrange(ctx.order) for _ in range(3))
        res.record(check_lemma5(ctx, r, a, b, c), (r, a, b, c))
    if ctx.n % 2 == 0:
        structured = samples // 10 if structured is None else structured
        hits = 0
        for _ in range(structured):
            r = rng.randint(1, 2 * ctx.n)
            abc = three_circle_root_instance(ctx, r, rng)
            if abc is None:
                continue
            hits += 1
            res.record(check_lemma5(ctx, r, *abc), (r, *abc))
        res.notes["three_circle_root_instances"] = hits
    return res


# -- Phi set on the unit circle ------------------------------------------------


@dataclass(frozen=True)
class PhiSet:
    """Candidate y-values on the unit circle for output difference b.

    ``members`` comes from the two-equation system before substitution;
    ``expanded_members`` uses the substituted quartic with y^(2^(2k)+1) and
    y^(2^(2k)) terms; ``printed_members`` uses the same quartic with the
    exponents 2^k+1 and 2^k.
    """

    b: int
    members: frozenset
    expanded_members: frozenset
    printed_members: frozenset

    @property
    def printed_form_agrees(self) -> bool:
        return self.printed_members == self.members

    @property
    def expanded_form_agrees(self) -> bool:
        return self.expanded_members == self.members


def phi_involution(ctx: FieldCtx, params: NihoParams, b: int, y: int) -> int:
    yk = ctx.frobenius(y, params.k)
    return ctx.div(ctx.mul(ctx.conjugate(b), yk) ^ 1, yk ^ b)


def phi_set(params: NihoParams, b: int, ctx: FieldCtx | None = None) -> PhiSet:
    if params.m > 8:
        raise DomainError("phi_set sweeps the unit circle exhaustively; m <= 8")
    ctx = ctx or make_field(params.n)
    if b == 1:
        raise DomainError("b = 1 is handled separately (DDT_F(1, 1) = 2^m)")
    K = 2**params.k
    bb = ctx.conjugate(b)
    y = ctx.unit_circle()
    y = y[y != 1]
    yk = ctx.vpow(y, K)
    y = y[(yk ^ b) != 0]
    yk = yk[(yk ^ b) != 0]
    z = ctx.vmul(ctx.vmul(yk, bb) ^ 1, ctx.vinv(yk ^ b))
    keep = z != y
    y, yk, z = y[keep], yk[keep], z[keep]

    # (y + conj(b)) z^(2^k) + b y + 1 = 0 with z fixed by the first equation
    sys_ok = (ctx.vmul(y ^ bb, ctx.vpow(z, K)) ^ ctx.vmul(y, b) ^ 1) == 0

    c_hi = b ^ ctx.pow(bb, K)
    c_mid = ctx.pow(bb, K + 1) ^ 1
    c_lo = ctx.pow(b, K + 1) ^ 1
    c_0 = ctx.pow(b, K) ^ bb
    ykk = ctx.vpow(y, K * K)
    expanded_ok = (ctx.vmul(ctx.vmul(ykk, y), c_hi) ^ ctx.vmul(ykk, c_mid) ^ ctx.vmul(y, c_lo) ^ c_0) == 0
    printed_ok = (ctx.vmul(ctx.vmul(yk, y), c_hi) ^ ctx.vmul(yk, c_mid) ^ ctx.vmul(y, c_lo) ^ c_0) == 0

    def as_set(mask):
        return frozenset(int(v) for v in y[mask])

    return PhiSet(b, as_set(sys_ok), as_set(expanded_ok), as_set(printed_ok))


def phi_suite(params: NihoParams, ctx: FieldCtx | None = None) -> LemmaResult:
    """Size bound, closure, DDT bound, the subfield equivalence and the quartic cross-checks."""
    ctx = ctx or make_field(params.n)
    res = LemmaResult(f"phi(m={params.m},k={params.k})", ctx.n)
    row = ddt_row(PowerFunction(ctx, params.d))
    sub = set(int(v) for v in ctx.subfield_elements())
    printed_mismatch = expanded_mismatch = 0
    for b in range(ctx.order):
        if b == 1:
            continue
        ph = phi_set(params, b, ctx)
        mem = ph.members
        ok = len(mem) % 2 == 0 and row[b] <= len(mem)
        if b != 0:
            ok = ok and len(mem) <= 2
        ok = ok and all(phi_involution(ctx, params, b, y) in mem for y in mem)
        if b in sub and b != 0:
            ok = ok and ((len(mem) == 2) == (row[b] == 2))
        res.record(ok, b)
        printed_mismatch += not ph.printed_form_agrees
        expanded_mismatch += not ph.expanded_form_agrees
    res.notes["printed_quartic_mismatches"] = printed_mismatch
    res.notes["expanded_quartic_mismatches"] = expanded_mismatch
    if expanded_mismatch:
        res.failures.append(("expanded quartic disagrees with the system", expanded_mismatch))
    return res
