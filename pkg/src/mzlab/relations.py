"""Generators for named relation families and exact verification machinery.

A relation instance is a weight-homogeneous combination of admissible words
representing LHS - RHS of an identity.  Instances can be verified either by
evaluating the modified truncated sums at a range of N (every relation here
holds bit-exactly at each finite truncation) or by checking that the
rewriting normal form vanishes; the two routes are independent.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    WordCombo,
    circled_product,
    combo_from_ints,
    harmonic_product,
    phi,
)
from .expander import normal_form, reduces_to_zero
from .indices import (
    DomainError,
    enumerate_class,
    index_to_word,
    mzv_dual,
    word_in_ge2,
    word_in_h1,
)
from .sums import eval_Z_dia, zeta_dia


@dataclass(frozen=True)
class RelationInstance:
    """A claimed relation: family tag, generating parameters, LHS - RHS."""

    family: str
    params: tuple
    combo: WordCombo

    def __post_init__(self):
        if not self.combo.in_h0():
            raise DomainError(f"{self.family}{self.params}: support not admissible")
        if self.combo and self.combo.is_homogeneous() is None:
            raise DomainError(f"{self.family}{self.params}: mixed weights")


def compositions_of(n: int, parts: int):
    """All tuples of `parts` positive integers summing to n."""
    if parts == 0:
        return [()] if n == 0 else []
    if n < parts:
        return []
    out = []
    for cuts in itertools.combinations(range(1, n), parts - 1):
        prev = 0
        comp = []
        for cut in cuts + (n,):
            comp.append(cut - prev)
            prev = cut
        out.append(tuple(comp))
    return out


def refinements(b, parts: int):
    """All indices of depth `parts` whose coarsenings include b."""
    s = len(b)
    out = []
    for split in compositions_of(parts, s):
        pieces = [compositions_of(bj, rj) for bj, rj in zip(b, split)]
        for choice in itertools.product(*pieces):
            out.append(tuple(itertools.chain.from_iterable(choice)))
    return out


def kaneko_sakata(a: int, b: int) -> RelationInstance:
    """Height-one expansion: ({1}^(a-1), b+1) against the ge-2 double sums."""
    if a < 1 or b < 1:
        raise DomainError(f"need a, b >= 1, got a={a}, b={b}")
    lhs = [(index_to_word((1,) * (a - 1) + (b + 1,)), 1)]
    rhs = []
    for r in range(1, min(a, b) + 1):
        sign = 1 if (r - 1) % 2 == 0 else -1
        for c in compositions_of(a, r):
            for d in compositions_of(b, r):
                merged = tuple(ci + di for ci, di in zip(c, d))
                rhs.append((index_to_word(merged), -sign))
    return RelationInstance("kaneko-sakata", (a, b), combo_from_ints(lhs + rhs))


def murahara_sakata(a: int, b) -> RelationInstance:
    """Depth-s generalization summing the height pattern over compositions."""
    b = tuple(b)
    s = len(b)
    if s < 1 or a < s:
        raise DomainError(f"need a >= dep(b) >= 1, got a={a}, b={b}")
    wt_b = sum(b)
    terms = []
    for parts in compositions_of(a, s):
        entries = []
        for aj, bj in zip(parts, b):
            entries.extend([1] * (aj - 1))
            entries.append(bj + 1)
        terms.append((index_to_word(tuple(entries)), 1))
    for r in range(s, min(a, wt_b) + 1):
        sign = 1 if (r - s) % 2 == 0 else -1
        for c in compositions_of(a, r):
            for d in refinements(b, r):
                merged = tuple(ci + di for ci, di in zip(c, d))
                terms.append((index_to_word(merged), -sign))
    return RelationInstance("murahara-sakata", (a, b), combo_from_ints(terms))


def linkaw(w1: str, w2: str) -> RelationInstance:
    """Linear part of the Kawashima family: phi(w1 * w2) x."""
    for w in (w1, w2):
        if not w or not word_in_h1(w):
            raise DomainError(f"linkaw arguments must be nonempty y-words, got {w!r}")
    combo = phi(
        harmonic_product(WordCombo.from_word(w1), WordCombo.from_word(w2))
    ).concat("x")
    return RelationInstance("linkaw", (w1, w2), combo)


def linkaw_star(w1: str, w2: str, w3: str) -> RelationInstance:
    """Harmonic closure of linkaw against an all-ge-2 word."""
    if not word_in_ge2(w3):
        raise DomainError(f"third word must lie in the ge-2 span, got {w3!r}")
    base = linkaw(w1, w2).combo
    combo = harmonic_product(base, WordCombo.from_word(w3))
    return RelationInstance("linkaw-star", (w1, w2, w3), combo)


def duality_instance(k) -> RelationInstance:
    """word(k) - word(k-dual) for an admissible index."""
    k = tuple(k)
    combo = WordCombo.from_index(k) - WordCombo.from_index(mzv_dual(k))
    return RelationInstance("duality", (k,), combo)


def kawashima_dia_sides(w1: str, w2: str, m: int):
    """Both sides of the block-merged Kawashima identity at level m.

    Returns (pairs, rhs): the left side is the sum over a + b = m with
    a, b >= 1 of products Z(phi(w1) (.) y^a) Z(phi(w2) (.) y^b); for m = 1
    the pair list is empty and the identity asserts the right side vanishes.
    """
    for w in (w1, w2):
        if not w or not word_in_h1(w):
            raise DomainError(f"arguments must be nonempty y-words, got {w!r}")
    if m < 1:
        raise DomainError(f"level must be >= 1, got {m}")
    p1, p2 = phi(WordCombo.from_word(w1)), phi(WordCombo.from_word(w2))
    pairs = []
    for a in range(1, m):
        b = m - a
        pairs.append(
            (
                circled_product(p1, WordCombo.from_word("y" * a)),
                circled_product(p2, WordCombo.from_word("y" * b)),
            )
        )
    product = harmonic_product(
        WordCombo.from_word(w1), WordCombo.from_word(w2)
    )
    rhs = circled_product(phi(product), WordCombo.from_word("y" * m))
    return pairs, rhs


def kawashima_dia_holds(w1: str, w2: str, m: int, N: int) -> bool:
    pairs, rhs = kawashima_dia_sides(w1, w2, m)
    lhs = sum(
        (eval_Z_dia(a, N) * eval_Z_dia(b, N) for a, b in pairs), Fraction(0)
    )
    return lhs == eval_Z_dia(rhs, N)


def verify(inst: RelationInstance, mode: str, n_range=None) -> dict:
    """Run one relation instance through an exact checking mode.

    mode "dia_eval" evaluates the combination at every N in n_range and
    requires 0; mode "normal_form" requires the rewriting normal form to
    vanish.  Failures are recorded in the report, not raised.
    """
    report = {
        "family": inst.family,
        "params": inst.params,
        "mode": mode,
        "checks": [],
        "ok": True,
    }
    if mode == "dia_eval":
        if n_range is None:
            raise DomainError("dia_eval mode needs a range of truncations")
        for N in n_range:
            value = eval_Z_dia(inst.combo, N)
            ok = value == 0
            report["checks"].append({"N": N, "ok": ok, "value": str(value)})
            report["ok"] = report["ok"] and ok
    elif mode == "normal_form":
        residue = normal_form(inst.combo)
        ok = not residue
        report["checks"].append(
            {"ok": ok, "residue_terms": len(residue.terms)}
        )
        report["ok"] = ok
    else:
        raise DomainError(f"unknown verification mode {mode!r}")
    return report


# ---------------------------------------------------------------------------
# exact linear algebra over the word basis


def admissible_word_basis(weight: int):
    """Admissible words of a weight in canonical index order."""
    return [index_to_word(k) for k in enumerate_class(weight, "adm")]


def _integer_rows(rows, weight: int):
    basis = admissible_word_basis(weight)
    position = {w: j for j, w in enumerate(basis)}
    matrix = []
    for combo in rows:
        length = combo.is_homogeneous()
        if combo and length != weight:
            raise DomainError(
                f"row of weight {length} in a weight-{weight} computation"
            )
        coeffs = combo.constant_coefficients()
        denom = 1
        for q in coeffs.values():
            denom = denom * q.denominator // math.gcd(denom, q.denominator)
        row = [0] * len(basis)
        for w, q in coeffs.items():
            if w not in position:
                raise DomainError(f"word {w!r} is not admissible of weight {weight}")
            row[position[w]] = int(q * denom)
        matrix.append(row)
    return matrix


def bareiss_rank(matrix) -> int:
    """Exact rank of an integer matrix by fraction-free elimination."""
    m = [list(row) for row in matrix]
    if not m:
        return 0
    rows, cols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(cols):
        pivot_row = None
        for i in range(rank, rows):
            if m[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pivot = m[rank][col]
        for i in range(rank + 1, rows):
            for j in range(col + 1, cols):
                m[i][j] = (pivot * m[i][j] - m[i][col] * m[rank][j]) // prev
            m[i][col] = 0
        prev = pivot
        rank += 1
        if rank == rows:
            break
    return rank


def rank_exact(rows, weight: int) -> int:
    """Rank over the rationals of weight-homogeneous combinations."""
    matrix = _integer_rows(rows, weight)
    return bareiss_rank(matrix)


class IncrementalRank:
    """Row-echelon accumulator over the rationals for one word basis."""

    def __init__(self, weight: int):
        self.weight = weight
        self.basis = admissible_word_basis(weight)
        self.position = {w: j for j, w in enumerate(self.basis)}
        self.pivots: dict[int, list] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, combo: WordCombo) -> bool:
        """Reduce a row against the current echelon; True if rank grew."""
        row = [Fraction(0)] * len(self.basis)
        for w, q in combo.constant_coefficients().items():
            row[self.position[w]] = q
        for j in range(len(row)):
            if not row[j]:
                continue
            pivot = self.pivots.get(j)
            if pivot is None:
                scale = 1 / row[j]
                self.pivots[j] = [x * scale for x in row]
                return True
            factor = row[j]
            for i in range(j, len(row)):
                row[i] -= factor * pivot[i]
        return False


def fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def kernel_target_dimension(weight: int) -> int:
    """Expected rank of the rewriting kernel at a weight:
    (number of admissible indices) - (number of all-ge-2 indices)."""
    return 2 ** (weight - 2) - fibonacci(weight - 1)


def yh_words(weight: int):
    """Nonempty y-leading words of a given weight, lexicographic."""
    return ["y" + "".join(rest) for rest in itertools.product("xy", repeat=weight - 1)]


def drop_generators(weight: int):
    """The spanning rows w - normal_form(w) over admissible words."""
    rows = []
    for w in admissible_word_basis(weight):
        rows.append(WordCombo.from_word(w) - normal_form(WordCombo.from_word(w)))
    return rows


def conjecture_explorer(weight: int, budget: int = 5000) -> dict:
    """Span the closed Kawashima family at one weight and compare its rank
    with the rewriting-kernel dimension.

    Triples (w1, w2, w3) are enumerated with w3 over ge-2 words by ascending
    weight (the empty word first), then (w1, w2) lexicographically; the
    outcome is evidence, not proof: "inconclusive" means the budget ran out
    below the target.
    """
    if weight < 3:
        raise DomainError(f"weight must be >= 3, got {weight}")
    target = kernel_target_dimension(weight)
    echelon = IncrementalRank(weight)
    tried = 0

    def w3_choices():
        yield ""
        for v3 in range(2, weight - 1):
            for k in enumerate_class(v3, "ge2"):
                yield index_to_word(k)

    done = False
    for w3 in w3_choices():
        if done:
            break
        rem = weight - 1 - len(w3)
        if rem < 2:
            continue
        pairs = []
        for v1 in range(1, rem):
            pairs.extend(itertools.product(yh_words(v1), yh_words(rem - v1)))
        for w1, w2 in sorted(pairs):
            if tried >= budget or echelon.rank >= target:
                done = True
                break
            tried += 1
            inst = linkaw_star(w1, w2, w3) if w3 else linkaw(w1, w2)
            echelon.add(inst.combo)

    rank = echelon.rank
    return {
        "weight": weight,
        "target": target,
        "rank": rank,
        "met": rank >= target,
        "triples_tried": tried,
        "budget": budget,
        "status": "met" if rank >= target else "inconclusive",
        "order": "w3 by ascending ge-2 weight (unit first), then (w1, w2) lexicographic",
    }


def mode_agreement(combos, n_range) -> list:
    """Classify combos as zero/nonzero by both routes; flag disagreements.

    A nonzero normal form whose evaluations all vanish on the tested range is
    flagged for a wider sweep rather than silently passed.
    """
    out = []
    for combo in combos:
        nf_zero = reduces_to_zero(combo)
        eval_zero = all(eval_Z_dia(combo, N) == 0 for N in n_range)
        entry = {"normal_form_zero": nf_zero, "eval_zero": eval_zero}
        if nf_zero != eval_zero:
            entry["flag"] = "needs larger N sweep"
        out.append(entry)
    return out


def dia_value_of_index(k, N: int) -> Fraction:
    return zeta_dia(tuple(k), N)


__all__ = [
    "RelationInstance",
    "compositions_of",
    "refinements",
    "kaneko_sakata",
    "murahara_sakata",
    "linkaw",
    "linkaw_star",
    "duality_instance",
    "kawashima_dia_sides",
    "kawashima_dia_holds",
    "verify",
    "rank_exact",
    "bareiss_rank",
    "IncrementalRank",
    "admissible_word_basis",
    "fibonacci",
    "kernel_target_dimension",
    "yh_words",
    "drop_generators",
    "conjecture_explorer",
    "mode_agreement",
]
