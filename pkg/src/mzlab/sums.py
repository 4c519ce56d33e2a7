"""Exact evaluators for truncated multiple-harmonic-style sums.

Every evaluator returns a Fraction computed without rounding.  Lattice sums
are evaluated by prefix-sum dynamic programming over the value range; sums
over subsets of marked positions are folded into a two-state DP (per position:
plain weight or modified weight) rather than enumerated, which keeps the cost
polynomial in depth.  Brute-force enumeration of the same sums lives in the
test suite as an independent oracle.

Three inequality regimes appear between consecutive variables and are
implemented as separate folds:

* ``S``      weak gap after a marked position, strict otherwise,
* ``S*``     strict gap only when an unmarked position precedes a marked one,
* ``S-bar``  strict gap before a marked position, weak otherwise.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .algebra import WordCombo
from .indices import (
    DomainError,
    coarsenings,
    composition_to_index,
    is_admissible,
    remove_and_subtract,
    subset_families,
    validate_composition,
    validate_index,
    word_to_index,
)

ZERO = Fraction(0)
ONE = Fraction(1)

#: default non-integer sample points for the deformation parameter
T_SAMPLES = (
    Fraction(7, 3),
    Fraction(-5, 2),
    Fraction(13, 7),
    Fraction(22, 9),
    Fraction(-31, 8),
)


def require_noninteger(t) -> Fraction:
    t = Fraction(t)
    if t.denominator == 1:
        raise DomainError(f"parameter t = {t} hits an integer pole")
    return t


def random_noninteger_rationals(seed: int, count: int):
    """Seeded non-integer rationals for fuzzing runs."""
    import random

    rng = random.Random(seed)
    out = []
    while len(out) < count:
        den = rng.randrange(2, 12)
        num = rng.randrange(-40, 41)
        if num % den:
            out.append(Fraction(num, den))
    return tuple(out)


# ---------------------------------------------------------------------------
# DP kernels.  Vectors are lists indexed by value - lo over a domain
# lo..hi; ``None`` in a modified-weight slot marks a position that cannot
# carry the mark.


def _prefix_lt(vec, zero):
    out = []
    run = zero
    for x in vec:
        out.append(run)
        run = run + x
    return out


def _prefix_le(vec, zero):
    out = []
    run = zero
    for x in vec:
        run = run + x
        out.append(run)
    return out


def _vec_add(a, b):
    return [x + y for x, y in zip(a, b)]


def _vec_mul(w, acc):
    return [x * y for x, y in zip(w, acc)]


def _fold_S(w_plain, w_marked, zero, tail_split=False):
    """Sum over marked subsets with weak gap after each marked position."""
    r = len(w_plain)
    size = len(w_plain[0])
    dp0 = list(w_plain[0])
    dp1 = list(w_marked[0]) if w_marked[0] is not None else [zero] * size
    for i in range(1, r):
        acc = _vec_add(_prefix_le(dp1, zero), _prefix_lt(dp0, zero))
        dp0 = _vec_mul(w_plain[i], acc)
        dp1 = _vec_mul(w_marked[i], acc) if w_marked[i] is not None else [zero] * size
    if tail_split:
        return dp0, dp1
    return sum(dp0, zero) + sum(dp1, zero)


def _fold_Sstar(w_plain, w_marked, zero, tail_split=False):
    """Sum over marked subsets; strict gap only from unmarked to marked."""
    r = len(w_plain)
    size = len(w_plain[0])
    dp0 = list(w_plain[0])
    dp1 = list(w_marked[0]) if w_marked[0] is not None else [zero] * size
    for i in range(1, r):
        both = _vec_add(dp0, dp1)
        acc0 = _prefix_le(both, zero)
        dp0_new = _vec_mul(w_plain[i], acc0)
        if w_marked[i] is not None:
            acc1 = _vec_add(_prefix_le(dp1, zero), _prefix_lt(dp0, zero))
            dp1_new = _vec_mul(w_marked[i], acc1)
        else:
            dp1_new = [zero] * size
        dp0, dp1 = dp0_new, dp1_new
    if tail_split:
        return dp0, dp1
    return sum(dp0, zero) + sum(dp1, zero)


def _fold_Sbar(w_plain, w_marked, zero, tail_split=False, reverse=False):
    """Sum over marked subsets; strict gap entering each marked position.

    With reverse=True the chain is folded from the last position to the
    first and the per-first-position vectors are produced, which is the
    orientation needed when a kernel couples to the first variable.
    """
    r = len(w_plain)
    size = len(w_plain[0])
    if not reverse:
        dp0 = list(w_plain[0])
        dp1 = list(w_marked[0]) if w_marked[0] is not None else [zero] * size
        for i in range(1, r):
            both = _vec_add(dp0, dp1)
            acc_weak = _prefix_le(both, zero)
            acc_strict = _prefix_lt(both, zero)
            dp0 = _vec_mul(w_plain[i], acc_weak)
            dp1 = (
                _vec_mul(w_marked[i], acc_strict)
                if w_marked[i] is not None
                else [zero] * size
            )
        if tail_split:
            return dp0, dp1
        return sum(dp0, zero) + sum(dp1, zero)

    # reverse orientation: suffix sums over the next variable
    dp0 = list(w_plain[r - 1])
    dp1 = list(w_marked[r - 1]) if w_marked[r - 1] is not None else [zero] * size
    for i in range(r - 2, -1, -1):
        # gap (i, i+1) is strict when position i+1 is marked
        suffix_ge = list(reversed(_prefix_le(list(reversed(dp0)), zero)))
        suffix_gt = list(reversed(_prefix_lt(list(reversed(dp1)), zero)))
        acc = _vec_add(suffix_ge, suffix_gt)
        dp0 = _vec_mul(w_plain[i], acc)
        dp1 = (
            _vec_mul(w_marked[i], acc) if w_marked[i] is not None else [zero] * size
        )
    if tail_split:
        return dp0, dp1
    return sum(dp0, zero) + sum(dp1, zero)


def _chain(weights, strict_after, zero):
    """Plain chain sum: strict_after[i] tells whether the gap before
    position i+1 is strict; weak otherwise."""
    dp = list(weights[0])
    for i in range(1, len(weights)):
        acc = _prefix_lt(dp, zero) if strict_after[i - 1] else _prefix_le(dp, zero)
        dp = _vec_mul(weights[i], acc)
    return sum(dp, zero)


def _inv_powers(N: int, k: int):
    """[1/1^k, ..., 1/(N-1)^k] as Fractions."""
    return [Fraction(1, n**k) for n in range(1, N)]


def _inv_comps(N: int):
    """[1/(N-1), ..., 1/1]: the factor 1/(N-n) for n = 1..N-1."""
    return [Fraction(1, N - n) for n in range(1, N)]


# ---------------------------------------------------------------------------
# plain and modified truncated sums


@lru_cache(maxsize=None)
def zeta_n(k, N: int) -> Fraction:
    """Truncated multiple harmonic sum over 0 < n_1 < ... < n_r < N."""
    k = tuple(k)
    validate_index(k)
    if not k:
        return ONE
    if N <= len(k):
        return ZERO
    weights = [_inv_powers(N, ki) for ki in k]
    return _chain(weights, [True] * (len(k) - 1), ZERO)


@lru_cache(maxsize=None)
def zeta_dia(k, N: int) -> Fraction:
    """Modified sum: value-1 positions may carry 1/(N-n) with a weak gap after.

    Sums over all subsets of the value-1 positions; on an all-ge-2 index this
    is exactly zeta_n.
    """
    k = tuple(k)
    if not is_admissible(k):
        raise DomainError(f"zeta_dia needs an admissible index, got {k}")
    if not k:
        return ONE
    if N <= 1:
        return ZERO
    comp = _inv_comps(N)
    w_plain = [_inv_powers(N, ki) for ki in k]
    w_marked = [comp if ki == 1 else None for ki in k]
    return _fold_S(w_plain, w_marked, ZERO)


def _zeta_dia_star_closed(k, N: int) -> Fraction:
    if N <= 1:
        return ZERO
    comp = _inv_comps(N)
    w_plain = [_inv_powers(N, ki) for ki in k]
    w_marked = [comp if ki == 1 else None for ki in k]
    return _fold_Sstar(w_plain, w_marked, ZERO)


@lru_cache(maxsize=None)
def zeta_dia_star(k, N: int) -> Fraction:
    """Star value: sum of zeta_dia over all coarsenings.

    Evaluated both as the coarsening sum and by the closed single-lattice
    form; a mismatch would mean an implementation bug and raises.
    """
    k = tuple(k)
    if not k or not is_admissible(k):
        raise DomainError(f"zeta_dia_star needs a nonempty admissible index, got {k}")
    by_coarsening = sum((zeta_dia(l, N) for l in coarsenings(k)), ZERO)
    closed = _zeta_dia_star_closed(k, N)
    if by_coarsening != closed:
        raise AssertionError(
            f"star-value forms disagree for {k} at N={N}: "
            f"{by_coarsening} vs {closed}"
        )
    return closed


def _block_chain(blocks) -> Fraction:
    """Chain over block variables: blocks is a list of
    (length, first_weight_vec, rest_weight_vec, strict_before)."""
    weights = []
    strict_after = []
    first = True
    for length, w_first, w_rest, strict_before in blocks:
        for j in range(length):
            weights.append(w_first if j == 0 else w_rest)
            if not first:
                strict_after.append(strict_before if j == 0 else False)
            first = False
    return _chain(weights, strict_after, ZERO)


@lru_cache(maxsize=None)
def zeta_flat(k, N: int) -> Fraction:
    """Discrete iterated-integral form: one weakly increasing block of k_i
    variables per entry, 1/(N-n) on the block head and 1/n elsewhere."""
    k = tuple(k)
    validate_index(k)
    if not k:
        return ONE
    if N <= 1:
        return ZERO
    comp = _inv_comps(N)
    inv = _inv_powers(N, 1)
    blocks = [(ki, comp, inv, True) for ki in k]
    return _block_chain(blocks)


@lru_cache(maxsize=None)
def zeta_dia_flat(k, N: int) -> Fraction:
    """Block form of zeta_dia: weak block gap after each value-1 entry."""
    k = tuple(k)
    if not is_admissible(k):
        raise DomainError(f"zeta_dia_flat needs an admissible index, got {k}")
    if not k:
        return ONE
    if N <= 1:
        return ZERO
    comp = _inv_comps(N)
    inv = _inv_powers(N, 1)
    blocks = []
    for i, ki in enumerate(k):
        strict_before = not (i > 0 and k[i - 1] == 1)
        blocks.append((ki, comp, inv, strict_before))
    return _block_chain(blocks)


def zeta_tworow(l, k, N: int) -> Fraction:
    """Two-row sum: block j has l_j weakly increasing variables, the first
    l_j - 1 weighted 1/(N-m) and the last 1/m^{k_j}; strict gaps between
    blocks."""
    l, k = tuple(l), tuple(k)
    validate_index(l)
    validate_index(k)
    if len(l) != len(k):
        raise DomainError(f"two-row sum needs equal depths, got {l} over {k}")
    if not k:
        return ONE
    if N <= 1:
        return ZERO
    comp = _inv_comps(N)
    weights = []
    strict_after = []
    first = True
    for lj, kj in zip(l, k):
        power = _inv_powers(N, kj)
        for j in range(lj):
            weights.append(power if j == lj - 1 else comp)
            if not first:
                strict_after.append(j == 0)
            first = False
    return _chain(weights, strict_after, ZERO)


def zeta_flat_tworow(l, k, N: int) -> Fraction:
    """Flat partner of the two-row sum: block i has k_i variables with the
    head weighted 1/(N-n)^{l_i}."""
    l, k = tuple(l), tuple(k)
    validate_index(l)
    validate_index(k)
    if len(l) != len(k):
        raise DomainError(f"two-row sum needs equal depths, got {l} over {k}")
    if not k:
        return ONE
    if N <= 1:
        return ZERO
    inv = _inv_powers(N, 1)
    blocks = []
    for li, ki in zip(l, k):
        head = [Fraction(1, (N - n) ** li) for n in range(1, N)]
        blocks.append((ki, head, inv, True))
    return _block_chain(blocks)


def eval_Z_dia(a: WordCombo, N: int) -> Fraction:
    """Linear extension of zeta_dia over an admissible-span combination."""
    total = ZERO
    for w, coeff in a.terms.items():
        q = coeff.constant_value()
        if w == "":
            total += q
        else:
            total += q * zeta_dia(word_to_index(w), N)
    return total


def eval_Z_h(a: WordCombo, N: int) -> Fraction:
    """Linear extension of zeta_n over an index-span combination."""
    total = ZERO
    for w, coeff in a.terms.items():
        q = coeff.constant_value()
        if w == "":
            total += q
        else:
            total += q * zeta_n(word_to_index(w), N)
    return total


# ---------------------------------------------------------------------------
# the difference-calculus family


def _h_value(c, N: int) -> Fraction:
    """Boundary-pinned block sum with value range 0..N-1.

    Value-1 blocks may be marked: a marked block is pinned to the previous
    block's last variable (the sentinel 0 before the first block) and
    contributes a factor 1/N; unmarked gaps are strict.  Odd blocks weigh
    1/(N-n) per variable, even blocks 1/n.
    """
    validate_composition(c)
    if not c:
        raise DomainError("the boundary-pinned sum needs a nonempty composition")
    size = N  # values 0..N-1
    zero = ZERO
    invN = Fraction(1, N)
    odd_w = [Fraction(1, N - v) for v in range(N)]
    even_w = [ZERO] + [Fraction(1, v) for v in range(1, N)]

    dp0 = None
    dp1 = None
    for pos, ci in enumerate(c, start=1):
        w = odd_w if pos % 2 == 1 else even_w
        markable = ci == 1
        if dp0 is None:
            # sentinel: strict means v > 0, marked means v == 0
            dp0 = [zero if v == 0 else w[v] for v in range(size)]
            dp1 = [invN] + [zero] * (size - 1) if markable else [zero] * size
        else:
            both = _vec_add(dp0, dp1)
            acc_strict = _prefix_lt(both, zero)
            dp0 = _vec_mul(w, acc_strict)
            dp1 = [invN * b for b in both] if markable else [zero] * size
        for _ in range(ci - 1):
            dp0 = _vec_mul(w, _prefix_le(dp0, zero))
            # multi-variable blocks cannot be marked
    return sum(dp0, zero) + sum(dp1, zero)


def f_g_h(c, N: int):
    """The three difference-calculus values of a composition at truncation N."""
    c = tuple(c)
    validate_composition(c)
    if not c:
        raise DomainError("f_g_h needs a nonempty composition")
    if N < 1:
        raise DomainError(f"truncation must be >= 1, got {N}")
    index = composition_to_index(c)
    f = zeta_dia(index, N)
    g = zeta_dia(index, N + 1)
    h = _h_value(c, N)
    return f, g, h


def _f_of(c, N: int) -> Fraction:
    if not c:
        return ONE
    return zeta_dia(composition_to_index(c), N)


def h_via_f(c, N: int) -> Fraction:
    """Pair-removal expansion of the boundary-pinned sum in terms of f."""
    c = tuple(c)
    total = ZERO
    for a_set, b_set in subset_families(c)["odd_even"]:
        sub = remove_and_subtract(c, a_set, b_set)
        sign = 1 if len(b_set) % 2 == 0 else -1
        total += Fraction(sign, N ** (len(a_set) + len(b_set))) * _f_of(sub, N)
    return total


def h_via_g(c, N: int) -> Fraction:
    """Pair-removal expansion of the boundary-pinned sum in terms of g."""
    c = tuple(c)
    total = ZERO
    for a_set, b_set in subset_families(c)["even_odd"]:
        sub = remove_and_subtract(c, a_set, b_set)
        sign = 1 if len(b_set) % 2 == 0 else -1
        total += Fraction(sign, N ** (len(a_set) + len(b_set))) * _f_of(sub, N + 1)
    return total


def difference_check(c, N: int) -> bool:
    """Exact check of the three-branch recursion for f_{N+1} - f_N."""
    c = tuple(c)
    validate_composition(c)
    if not c:
        raise DomainError("difference_check needs a nonempty composition")
    if N < 1:
        raise DomainError(f"truncation must be >= 1, got {N}")
    lhs = _f_of(c, N + 1) - _f_of(c, N)
    families = subset_families(c)
    rhs = ZERO
    for parity, min_card, b_sign, delta in (
        ("even_odd", 1, -1, True),
        ("even_odd", 2, -1, False),
        ("odd_even", 2, 1, False),
    ):
        for a_set, b_set in families[parity]:
            card = len(a_set) + len(b_set)
            if card < min_card:
                continue
            sign = b_sign if len(b_set) % 2 == 0 else -b_sign
            sub = remove_and_subtract(c, a_set, b_set)
            value = _f_of(sub, N + 1) - _f_of(sub, N) if delta else _f_of(sub, N)
            rhs += Fraction(sign, N**card) * value
    return lhs == rhs


# ---------------------------------------------------------------------------
# deformed sums and kernels


@lru_cache(maxsize=None)
def F_kawashima(k, N: int, t) -> Fraction:
    """Signed sum over marked subsets of all positions with weights
    1/(N-n+t)^{k_i} at marked positions and strict gaps entering them."""
    k = tuple(k)
    validate_index(k)
    t = require_noninteger(t)
    if not k:
        return ONE
    if N <= 1:
        return ZERO
    w_plain = [_inv_powers(N, ki) for ki in k]
    w_marked = [
        [-1 / (N - n + t) ** ki for n in range(1, N)] for ki in k
    ]
    return _fold_Sbar(w_plain, w_marked, ZERO)


def eval_F(a: WordCombo, N: int, t) -> Fraction:
    """Linear extension of F_kawashima over an index-span combination."""
    total = ZERO
    for w, coeff in a.terms.items():
        q = coeff.constant_value()
        if w == "":
            total += q
        else:
            total += q * F_kawashima(word_to_index(w), N, t)
    return total


def _g_tail(N: int, t):
    """tail[n] = (-1)^(n-1) binom(t, n) (1-N)_n / (1-N-t)_n for n = 1..N-1."""
    tails = [None]  # 1-based
    b = ONE  # binom(t, n)
    p = ONE  # (1-N)_n
    q = ONE  # (1-N-t)_n
    sign = 1
    for n in range(1, N):
        b = b * (t - (n - 1)) / n
        p = p * (1 - N + (n - 1))
        q = q * (1 - N - t + (n - 1))
        tails.append(sign * b * p / q)
        sign = -sign
    return tails


@lru_cache(maxsize=None)
def G_kawashima(k, N: int, t) -> Fraction:
    """Newton-series-flavored partner of F_kawashima.

    Marked subsets range over the value-1 positions except the last; the last
    variable carries the binomial/rising-factorial tail factor.
    """
    k = tuple(k)
    validate_index(k)
    t = require_noninteger(t)
    if not k:
        raise DomainError("G_kawashima needs a nonempty index")
    if N <= 1:
        return ZERO
    r = len(k)
    tail = _g_tail(N, t)
    comp_t = [1 / (N - n + t) for n in range(1, N)]
    w_plain = [_inv_powers(N, ki) for ki in k]
    w_plain[r - 1] = [w * tail[n] for n, w in enumerate(w_plain[r - 1], start=1)]
    w_marked = [comp_t if ki == 1 else None for ki in k]
    w_marked[r - 1] = None
    return _fold_Sstar(w_plain, w_marked, ZERO)


class TruncatedSeries:
    """Power series in t with Fraction coefficients, exact modulo t^(M+1)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order=None):
        coeffs = [Fraction(c) for c in coeffs]
        if order is not None:
            coeffs = (coeffs + [ZERO] * (order + 1))[: order + 1]
        self.coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, q, order: int) -> "TruncatedSeries":
        return cls([Fraction(q)], order=order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other) -> "TruncatedSeries":
        order = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(order + 1)]
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs])

    def __sub__(self, other) -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other) -> "TruncatedSeries":
        order = min(self.order, other.order)
        out = [ZERO] * (order + 1)
        for i, a in enumerate(self.coeffs[: order + 1]):
            if a:
                for j in range(order + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return TruncatedSeries(out)

    def reciprocal(self) -> "TruncatedSeries":
        if not self.coeffs[0]:
            raise DomainError("cannot invert a series with zero constant term")
        inv0 = 1 / self.coeffs[0]
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = ZERO
            for j in range(1, n + 1):
                acc += self.coeffs[j] * out[n - j]
            out.append(-inv0 * acc)
        return TruncatedSeries(out)

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)})"


def series_t(order: int) -> TruncatedSeries:
    return TruncatedSeries([0, 1], order=order)


def G_series(k, N: int, M: int) -> TruncatedSeries:
    """Order-M expansion of G_kawashima around t = 0 by series arithmetic."""
    k = tuple(k)
    validate_index(k)
    if not k:
        raise DomainError("G_series needs a nonempty index")
    if M < 1:
        raise DomainError(f"order must be >= 1, got {M}")
    zero = TruncatedSeries.constant(0, M)
    if N <= 1:
        return zero
    t = series_t(M)
    r = len(k)

    # tail factor as a series per value of the last variable
    tails = [None]
    b = TruncatedSeries.constant(1, M)
    p = ONE
    q = TruncatedSeries.constant(1, M)
    sign = 1
    for n in range(1, N):
        b = b * (t - TruncatedSeries.constant(n - 1, M)) * TruncatedSeries.constant(
            Fraction(1, n), M
        )
        p = p * (1 - N + (n - 1))
        q = q * (TruncatedSeries.constant(1 - N + (n - 1), M) - t)
        tails.append(b * TruncatedSeries.constant(p, M) * q.reciprocal() * (
            TruncatedSeries.constant(sign, M)
        ))
        sign = -sign

    comp_t = [
        (TruncatedSeries.constant(N - n, M) + t).reciprocal() for n in range(1, N)
    ]
    w_plain = [
        [TruncatedSeries.constant(Fraction(1, n**ki), M) for n in range(1, N)]
        for ki in k
    ]
    w_plain[r - 1] = [w * tails[n] for n, w in enumerate(w_plain[r - 1], start=1)]
    w_marked = [comp_t if ki == 1 else None for ki in k]
    w_marked[r - 1] = None
    return _fold_Sstar(w_plain, w_marked, zero)


# ---------------------------------------------------------------------------
# connector kernels and connected sums


@lru_cache(maxsize=None)
def _rising_table(N: int, t, top: int):
    """(1 - N - t)_j for j = 0..top."""
    base = 1 - N - t
    out = [ONE]
    for j in range(top):
        out.append(out[-1] * (base + j))
    return out


@lru_cache(maxsize=None)
def _connector_nn(n: int, m: int, N: int, t) -> Fraction:
    if n > m or m == 0:
        return ZERO
    rising = _rising_table(N, t, 2 * N)
    binom = Fraction(1)
    for j in range(n):
        binom = binom * (m - j) / (j + 1)
    sign = 1 if (n - 1) % 2 == 0 else -1
    return sign * n * binom * rising[n + m] / (rising[n] * rising[m])


def connector(kind: str, n: int, m: int, N: int, t) -> Fraction:
    """The four coupling kernels between adjacent chain variables.

    kind "nn" couples two plain values, "Nn"/"nN" shift the first/second
    argument by N - . + t, and "NN" shifts both.  The second argument m = 1
    of kind "nN" is the defined-zero boundary case.
    """
    t = require_noninteger(t)
    if not (1 <= n < N and 1 <= m < N):
        raise DomainError(f"connector arguments out of range: n={n}, m={m}, N={N}")
    if kind == "nn":
        return _connector_nn(n, m, N, t)
    if kind == "Nn":
        return (N - n + t) / (N - n - m + t) * _connector_nn(n, m, N, t)
    if kind == "nN":
        return _connector_nn(n, m - 1, N, t)
    if kind == "NN":
        return (
            (N - n + t)
            * (N - m + t)
            / (m * (N - n - m + t))
            * _connector_nn(n, m, N, t)
        )
    raise DomainError(f"unknown connector kind {kind!r}")


def _connected_left(k, N: int, t, mark_last: bool):
    """Star-gap fold over the first chain; returns per-last-value vectors
    (unmarked, marked).  mark_last=False excludes the final position from
    the markable set."""
    comp_t = [1 / (N - n + t) for n in range(1, N)]
    w_plain = [_inv_powers(N, ki) for ki in k]
    w_marked = [comp_t if ki == 1 else None for ki in k]
    if not mark_last:
        w_marked[-1] = None
    return _fold_Sstar(w_plain, w_marked, ZERO, tail_split=True)


def _connected_right(l, N: int, t, force_last=None):
    """Reverse bar-gap fold over the second chain; returns per-first-value
    vectors (unmarked, marked).  force_last pins the final position's mark."""
    w_plain = [_inv_powers(N, lj) for lj in l]
    w_marked = [[-1 / (N - n + t) ** lj for n in range(1, N)] for lj in l]
    if force_last == 0:
        w_marked[-1] = None
    elif force_last == 1:
        w_plain = list(w_plain)
        w_plain[-1] = [ZERO] * (N - 1)
    return _fold_Sbar(w_plain, w_marked, ZERO, tail_split=True, reverse=True)


def connected_sum(k, l, N: int, t, reading: str = "first") -> Fraction:
    """Coupled pair of chains joined by a connector kernel.

    `reading` selects which position of the second chain decides whether the
    kernel's second argument is shifted: "first" uses the first position's
    mark, "last" the final position's mark.
    """
    k, l = tuple(k), tuple(l)
    validate_index(k)
    validate_index(l)
    t = require_noninteger(t)
    if not k or not l:
        raise DomainError("connected_sum needs nonempty indices on both sides")
    if N <= 1:
        return ZERO
    u0, u1 = _connected_left(k, N, t, mark_last=True)

    if reading == "first":
        v0, v1 = _connected_right(l, N, t)
        plain_vec, shifted_vec = v0, v1
    elif reading == "last":
        a0, a1 = _connected_right(l, N, t, force_last=0)
        b0, b1 = _connected_right(l, N, t, force_last=1)
        plain_vec = _vec_add(a0, a1)
        shifted_vec = _vec_add(b0, b1)
    else:
        raise DomainError(f"unknown reading {reading!r}")

    total = ZERO
    for n in range(1, N):
        un0, un1 = u0[n - 1], u1[n - 1]
        if not un0 and not un1:
            continue
        for m in range(1, N):
            vp, vs = plain_vec[m - 1], shifted_vec[m - 1]
            if vp:
                if un0:
                    total += un0 * connector("nn", n, m, N, t) * vp
                if un1:
                    total += un1 * connector("Nn", n, m, N, t) * vp
            if vs:
                if un0:
                    total += un0 * connector("nN", n, m, N, t) * vs
                if un1:
                    total += un1 * connector("NN", n, m, N, t) * vs
    return total


def connected_sum_up(k, N: int, t) -> Fraction:
    """Boundary connected sum with an empty second chain.

    The first chain runs over the index with its last entry raised; the last
    variable couples to the kernel at m = N - 1 and carries an extra 1/n."""
    k = tuple(k)
    validate_index(k)
    t = require_noninteger(t)
    if not k:
        raise DomainError("connected_sum_up needs a nonempty index")
    if N <= 1:
        return ZERO
    u0, u1 = _connected_left(k, N, t, mark_last=False)
    assert all(not x for x in u1)
    total = ZERO
    for n in range(1, N):
        if u0[n - 1]:
            total += u0[n - 1] * connector("nn", n, N - 1, N, t) / n
    return total


def zeta_dia_param(k, n0: int, N: int, z) -> Fraction:
    """Parameterized modified sum over values n0+1..N with the last variable
    pinned at N; marked value-1 positions weigh 1/(z - n)."""
    k = tuple(k)
    validate_index(k)
    z = Fraction(z)
    if not (0 <= n0 <= N - 1):
        raise DomainError(f"need 0 <= n0 <= N-1, got n0={n0}, N={N}")
    if z.denominator == 1 and n0 < z <= N:
        raise DomainError(f"parameter z = {z} hits a pole in ({n0}, {N}]")
    if not k:
        return ONE
    size = N - n0  # values n0+1 .. N
    values = range(n0 + 1, N + 1)
    w_plain = [[Fraction(1, v**ki) for v in values] for ki in k]
    w_marked = [
        [1 / (z - v) for v in values] if ki == 1 else None for ki in k
    ]
    dp0 = list(w_plain[0])
    dp1 = list(w_marked[0]) if w_marked[0] is not None else [ZERO] * size
    for i in range(1, len(k)):
        acc = _vec_add(_prefix_le(dp1, ZERO), _prefix_lt(dp0, ZERO))
        dp0 = _vec_mul(w_plain[i], acc)
        dp1 = (
            _vec_mul(w_marked[i], acc)
            if w_marked[i] is not None
            else [ZERO] * size
        )
    # final gap to the pinned variable at N: weak when marked, strict otherwise
    return sum(dp1, ZERO) + sum(dp0[:-1], ZERO)


# ---------------------------------------------------------------------------
# floating point probe


def zeta_float(k, N: int) -> float:
    """Double-precision partial sum of zeta_n; convergence probes only."""
    k = tuple(k)
    if not is_admissible(k):
        raise DomainError(f"zeta_float needs an admissible index, got {k}")
    if not k:
        return 1.0
    if N <= len(k):
        return 0.0
    dp = [0.0] * N  # dp[n] over values 1..N-1
    for n in range(1, N):
        dp[n] = n ** (-float(k[0]))
    for ki in k[1:]:
        run = 0.0
        new = [0.0] * N
        for n in range(1, N):
            run += dp[n - 1]
            new[n] = run * n ** (-float(ki))
        dp = new
    return sum(dp)
