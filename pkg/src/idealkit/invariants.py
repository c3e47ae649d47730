"""Engine-agnostic extraction of multiplicity data from ideal powers.

Given an m-primary ideal in one of the supported engines (monomial exponent
ideals, numerical-semigroup ideals, or GF(p) polynomial ideals), this module
tabulates the length and generator-count sequences of its powers, fits them in
the signed binomial basis to obtain the Hilbert coefficients e_0..e_d and
fiber coefficients f_0..f_{d-1}, and computes reduction numbers, minimal
reductions, socle extensions and related integers.  Everything is exact.
"""

from dataclasses import dataclass

from . import binomfit, groebner, monomial, semigroup

HORIZON_MAX = 200
REDUCTION_CAP = 30
SAMPLE_COUNT = 8


class HorizonExceeded(Exception):
    """Length sequence did not become polynomial within the horizon cap."""


class OracleMismatch(Exception):
    """Two independent computations of the same invariant disagree."""


class NoReductionFound(Exception):
    pass


@dataclass(frozen=True)
class RingContext:
    """Ambient local ring: a localized polynomial ring or k[[t^H]]."""

    kind: str  # "poly" | "semigroup"
    dim: int
    char_p: int = groebner.DEFAULT_PRIME
    numerical: object = None

    def maximal_ideal(self):
        if self.kind == "semigroup":
            return semigroup.maximal_ideal(self.numerical)
        gens = []
        for i in range(self.dim):
            e = [0] * self.dim
            e[i] = 1
            gens.append(tuple(e))
        return monomial.MonomialIdeal(self.dim, tuple(gens))


def poly_context(dim, char_p=groebner.DEFAULT_PRIME):
    if dim < 1:
        raise ValueError("dimension must be >= 1")
    return RingContext("poly", dim, char_p)


def semigroup_context(H):
    return RingContext("semigroup", 1, numerical=H)


@dataclass(frozen=True)
class HilbertData:
    dim: int
    e: tuple
    postulation: int
    sequence: binomfit.LengthSequence


@dataclass(frozen=True)
class FiberData:
    dim: int
    f: tuple
    postulation: int
    sequence: binomfit.LengthSequence


@dataclass(frozen=True)
class ReductionReport:
    q_descriptor: tuple
    reduction_number: int
    is_minimal: bool
    samples_tried: int
    certified: bool


@dataclass(frozen=True)
class SallyReport:
    s0: int
    e1_i: int
    e1_q: int
    e0_i: int
    colength_i: int
    hypotheses_note: str


# ---------------------------------------------------------------- dispatch

def _engine(I):
    if isinstance(I, monomial.MonomialIdeal):
        return "monomial"
    if isinstance(I, semigroup.SemigroupIdeal):
        return "semigroup"
    if isinstance(I, groebner.GroebnerIdeal):
        return "groebner"
    raise TypeError(f"unsupported ideal type {type(I)!r}")


def colength_of(I):
    kind = _engine(I)
    if kind == "monomial":
        return monomial.colength(I)
    if kind == "semigroup":
        return semigroup.colength(I)
    return groebner.local_colength(I)


def nu_of(I):
    kind = _engine(I)
    if kind == "monomial":
        return monomial.nu(I)
    if kind == "semigroup":
        return semigroup.nu(I)
    raise TypeError("generator counts are only exact in the monomial engines")


def product_of(I, J):
    kind = _engine(I)
    if kind != _engine(J):
        raise TypeError("mixed-engine product")
    if kind == "monomial":
        return monomial.product(I, J)
    if kind == "semigroup":
        return semigroup.product(I, J)
    return groebner.ideal_product(I, J)


def power_of(I, n):
    kind = _engine(I)
    if kind == "monomial":
        return monomial.power(I, n)
    if kind == "semigroup":
        return semigroup.power(I, n)
    return groebner.ideal_power(I, n)


def order_of(I):
    kind = _engine(I)
    if kind == "monomial":
        return monomial.order(I)
    if kind == "semigroup":
        return semigroup.order(I)
    raise TypeError("order implemented for the monomial engines")


def contains_of(I, J):
    """Containment J subset of I."""
    kind = _engine(I)
    if kind == "monomial":
        return I.contains_ideal(J)
    if kind == "semigroup":
        return semigroup.contains_ideal(I, J)
    return all(I.contains(g) for g in J.gens)


def equals_of(I, J):
    kind = _engine(I)
    if kind == "monomial":
        return I.gens == J.gens
    if kind == "semigroup":
        return semigroup.equals(I, J)
    return groebner.local_ideal_equal(I, J)


def to_groebner(ctx, I):
    if _engine(I) == "groebner":
        return I
    if _engine(I) != "monomial":
        raise TypeError("cannot lift a semigroup ideal to the GF(p) engine")
    return groebner.from_monomial_ideal(I, ctx.char_p)


# ---------------------------------------------------------------- sequences

def _power_values(I, nmax, value):
    out = []
    cur = I
    for n in range(1, nmax + 1):
        out.append(value(cur))
        if n < nmax:
            cur = product_of(cur, I)
    return out


def length_sequence(I, nmax):
    """lam(R/I^n) for n = 1..nmax."""
    return binomfit.LengthSequence(1, tuple(_power_values(I, nmax, colength_of)))


def nu_sequence(I, nmax):
    return binomfit.LengthSequence(1, tuple(_power_values(I, nmax, nu_of)))


def _fit_with_horizon(make_seq, degree, start_horizon, guard=None):
    horizon = max(start_horizon, degree + 1 + (guard if guard is not None else degree + 2))
    while True:
        seq = make_seq(horizon)
        try:
            report = binomfit.fit_binomial(seq, degree, guard=guard)
            return report, seq
        except binomfit.NonPolynomial:
            if horizon >= HORIZON_MAX:
                raise HorizonExceeded(f"no polynomial behaviour up to n={horizon}")
            horizon = min(2 * horizon, HORIZON_MAX)


def hilbert_coeffs(ctx, I, guard=None):
    """Hilbert coefficients e_0..e_d of an m-primary ideal."""
    d = ctx.dim
    report, seq = _fit_with_horizon(lambda h: length_sequence(I, h), d,
                                    2 * (d + 3), guard)
    return HilbertData(d, report.poly.coeffs, report.postulation_index, seq)


def fiber_coeffs(ctx, J, guard=None):
    """Fiber coefficients f_0..f_{d-1}, with an independent f_0 cross-check.

    The partial sums of nu(J^n) are of polynomial type of degree d with the
    same leading coefficient, so a second fit at degree d must reproduce f_0.
    """
    d = ctx.dim
    report, seq = _fit_with_horizon(lambda h: nu_sequence(J, h), d - 1,
                                    2 * (d + 3), guard)
    sums = []
    acc = 0
    for v in seq.values:
        acc += v
        sums.append(acc)
    sum_seq = binomfit.LengthSequence(1, tuple(sums))
    try:
        sum_fit = binomfit.fit_binomial(sum_seq, d, guard=guard)
    except binomfit.NonPolynomial as exc:
        raise OracleMismatch(f"partial-sum fit failed: {exc}")
    if sum_fit.poly.coeffs[0] != report.poly.coeffs[0]:
        raise OracleMismatch(
            f"f0 mismatch: direct {report.poly.coeffs[0]}, "
            f"iterated-sum {sum_fit.poly.coeffs[0]}")
    return FiberData(d, report.poly.coeffs, report.postulation_index, seq)


def normal_coeffs(ctx, I, guard=None):
    """Hilbert and fiber data of the integral-closure filtration n -> bar(I^n)."""
    if _engine(I) != "monomial":
        raise monomial.DimensionUnsupported("normal filtration needs the monomial engine")
    d = ctx.dim
    NP = monomial.newton(I)

    def make(seq_index):
        def build(h):
            data = monomial.closure_data(I, h, NP=NP)
            return binomfit.LengthSequence(1, tuple(row[seq_index] for row in data))
        return build

    hrep, hseq = _fit_with_horizon(make(0), d, 2 * (d + 3), guard)
    frep, fseq = _fit_with_horizon(make(1), d - 1, 2 * (d + 3), guard)
    return (HilbertData(d, hrep.poly.coeffs, hrep.postulation_index, hseq),
            FiberData(d, frep.poly.coeffs, frep.postulation_index, fseq))


# ---------------------------------------------------------------- reductions

def _descriptor(Q):
    kind = _engine(Q)
    if kind in ("monomial", "semigroup"):
        return tuple(Q.gens)
    return tuple(tuple(sorted(g.items())) for g in Q.gens)


def reduction_number(ctx, Q, I, cap=REDUCTION_CAP):
    """Least s with I^(s+1) = Q * I^s, dispatched to the exact engine."""
    kq, ki = _engine(Q), _engine(I)
    if kq == ki and kq in ("monomial", "semigroup"):
        if not contains_of(I, Q):
            raise ValueError("Q is not contained in I")
        Is = power_of(I, 0)
        for s in range(cap + 1):
            Isp1 = product_of(Is, I)
            QIs = product_of(Q, Is)
            if equals_of(QIs, Isp1):
                return s
            Is = Isp1
        raise groebner.CapExceeded(f"no reduction relation up to cap {cap}")
    Qg = to_groebner(ctx, Q) if kq != "groebner" else Q
    Ig = to_groebner(ctx, I) if ki != "groebner" else I
    return groebner.reduction_number(Qg, Ig, cap=cap)


def minimal_reduction(ctx, I, samples=SAMPLE_COUNT, seed=0, cap=REDUCTION_CAP):
    """A d-generated reduction with the best reduction number over samples."""
    if ctx.kind == "semigroup":
        e = min(I.gens)
        Q = semigroup.ideal(ctx.numerical, [e])
        s = reduction_number(ctx, Q, I, cap=cap)
        return ReductionReport(_descriptor(Q), s, True, 1, True)
    d = ctx.dim
    if _engine(I) == "monomial" and nu_of(I) == d:
        return ReductionReport(_descriptor(I), 0, True, 0, True)
    Ig = to_groebner(ctx, I)
    best = None
    tried = 0
    for k in range(samples):
        Q = groebner.random_minimal_reduction(list(Ig.gens), d, Ig.ring,
                                              rng_seed=seed * 10007 + k)
        tried += 1
        try:
            s = groebner.reduction_number(Q, Ig, cap=cap)
        except groebner.CapExceeded:
            continue
        if best is None or s < best[1]:
            best = (Q, s)
        if s == 0:
            break
    if best is None:
        raise NoReductionFound(f"no sampled reduction within cap {cap}")
    Q, s = best
    return ReductionReport(_descriptor(Q), s, True, tried, False)


def sally_multiplicity(ctx, Q, I, e1_q=None, cap=REDUCTION_CAP):
    """s0 = e1(I) - e1(Q) - e0(I) + lam(R/I) for a reduction Q of I."""
    hil = hilbert_coeffs(ctx, I)
    note = "dim of the Sally module assumed maximal; H^0_m(R) = 0 in these domains"
    if e1_q is None:
        if _engine(Q) == "groebner":
            # a d-generated parameter ideal in a CM ring has e1 = 0
            e1_q = 0
            note += "; e1(Q) = 0 taken from the parameter-ideal vanishing"
        else:
            e1_q = hilbert_coeffs(ctx, Q).e[1]
    lam = colength_of(I)
    s0 = hil.e[1] - e1_q - hil.e[0] + lam
    return SallyReport(s0, hil.e[1], e1_q, hil.e[0], lam, note)


def socle_extension(ctx, Q, s):
    """The ideal Q : m^s."""
    if s == 0:
        return Q
    m = ctx.maximal_ideal()
    ms = power_of(m, s)
    if _engine(Q) == "monomial":
        return monomial.colon(Q, ms)
    if _engine(Q) == "semigroup":
        return semigroup.colon(Q, ms)
    return groebner.colon_ideal(Q, to_groebner(ctx, ms))


def nu_power_criterion(ctx, I, cap=REDUCTION_CAP):
    """Least n with nu(I^n) < C(n+d, d); then n-1 bounds some minimal
    reduction number of I."""
    d = ctx.dim
    cur = I
    for n in range(1, cap + 1):
        if nu_of(cur) < binomfit.binom(n + d, d):
            return n - 1
        cur = product_of(cur, I)
    raise groebner.CapExceeded(f"criterion inconclusive up to n={cap}")


def e1_series_check(ctx, Q, I, cap=REDUCTION_CAP):
    """Independent dim-1 value of e1: sum of lam(I^(n+1)/Q*I^n) over n >= 0."""
    if ctx.dim != 1:
        raise ValueError("series oracle is one-dimensional only")
    total = 0
    In = None
    for n in range(cap + 1):
        Inext = power_of(I, n + 1)
        QIs = product_of(Q, In) if n > 0 else Q
        step = semigroup.rel_length(Inext, QIs)
        total += step
        if step == 0 and equals_of(QIs, Inext):
            return total
        In = Inext
    raise groebner.CapExceeded("series did not terminate within cap")
