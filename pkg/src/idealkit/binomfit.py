"""Integer sequences of polynomial type and their binomial-basis coefficients.

A length sequence n -> lam(n) that eventually agrees with a degree-D polynomial
is stored exactly and its coefficients are extracted in the signed binomial
basis

    P(n) = sum_{i=0}^{D} (-1)^i c_i * C(n+D-1-i, D-i),

the convention in which Hilbert-Samuel coefficients e_0, ..., e_d and fiber
coefficients f_0, ..., f_{d-1} live.  All arithmetic is exact integer/rational.
"""

from dataclasses import dataclass
from fractions import Fraction


class NonPolynomial(Exception):
    """The guard window disagrees with the fitted polynomial."""


class WindowTooShort(Exception):
    """Not enough sampled values to fit and verify."""


def binom(m, k):
    """Binomial coefficient C(m, k) as a polynomial in m (m may be negative)."""
    if k < 0:
        return 0
    num = 1
    for j in range(k):
        num *= m - j
    den = 1
    for j in range(1, k + 1):
        den *= j
    q, r = divmod(num, den)
    assert r == 0
    return q


@dataclass(frozen=True)
class LengthSequence:
    """Values of an integer sequence at start_n, start_n+1, ..."""

    start_n: int
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if not self.values:
            raise ValueError("empty sequence")

    def __len__(self):
        return len(self.values)

    def at(self, n):
        return self.values[n - self.start_n]

    @property
    def end_n(self):
        return self.start_n + len(self.values) - 1


@dataclass(frozen=True)
class BinomialPolynomial:
    """Coefficients c_0..c_D in the (optionally signed) binomial basis."""

    degree_d: int
    coeffs: tuple
    signed: bool = True

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if len(self.coeffs) != self.degree_d + 1:
            raise ValueError("need D+1 coefficients")


@dataclass(frozen=True)
class FitReport:
    poly: BinomialPolynomial
    postulation_index: int
    samples_used: int


def eval_binomial(p, n):
    """Exact value of the binomial-basis polynomial at n."""
    D = p.degree_d
    total = 0
    for i, c in enumerate(p.coeffs):
        sign = -1 if (p.signed and i % 2 == 1) else 1
        total += sign * c * binom(n + D - 1 - i, D - i)
    return total


def tabulate(p, start_n, count):
    """LengthSequence of p evaluated at start_n, ..., start_n+count-1."""
    return LengthSequence(start_n, tuple(eval_binomial(p, start_n + j) for j in range(count)))


def finite_difference(seq):
    """First forward difference; start index unchanged, length shrinks by one."""
    if len(seq) < 2:
        raise WindowTooShort("need at least 2 values")
    v = seq.values
    return LengthSequence(seq.start_n, tuple(v[i + 1] - v[i] for i in range(len(v) - 1)))


def _solve_exact(rows, rhs):
    """Gaussian elimination over Q; returns solution or None if singular."""
    m = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    n = len(m)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv = m[col][col]
        m[col] = [x / inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def fit_binomial(seq, dim_d, guard=None):
    """Fit a degree-<=dim_d signed binomial polynomial to the trailing window.

    The last dim_d+1+guard values are used: dim_d+1 for interpolation and
    guard extra points for verification.  Raises NonPolynomial when the guard
    points disagree (caller should extend the sequence and retry).
    """
    if guard is None:
        guard = dim_d + 2
    need = dim_d + 1 + guard
    if len(seq) < need:
        raise WindowTooShort(f"need {need} values, have {len(seq)}")
    window_start = seq.end_n - need + 1
    fit_ns = list(range(window_start, window_start + dim_d + 1))
    rows = []
    for n in fit_ns:
        rows.append([(-1 if i % 2 else 1) * binom(n + dim_d - 1 - i, dim_d - i)
                     for i in range(dim_d + 1)])
    sol = _solve_exact(rows, [seq.at(n) for n in fit_ns])
    if sol is None:
        raise NonPolynomial("degenerate interpolation window")
    if any(c.denominator != 1 for c in sol):
        raise NonPolynomial("non-integral binomial coefficients")
    poly = BinomialPolynomial(dim_d, tuple(int(c) for c in sol))
    for n in range(window_start + dim_d + 1, seq.end_n + 1):
        if eval_binomial(poly, n) != seq.at(n):
            raise NonPolynomial(f"guard point n={n} disagrees")
    # least n in the sampled range from which the polynomial matches onward
    postulation = window_start
    for n in range(window_start - 1, seq.start_n - 1, -1):
        if eval_binomial(poly, n) != seq.at(n):
            break
        postulation = n
    return FitReport(poly=poly, postulation_index=postulation, samples_used=need)
