"""Rewriting admissible words into the all-entries-ge-2 span.

The core recurrence eliminates the 1-entries of an index: ``drop_ones`` maps
an even-length composition to an integer combination of words in which every
y is immediately followed by an x.  Its linear extension ``normal_form`` is an
idempotent projection of the admissible span, and the expansion of an index
over the ge-2 basis is read off by decoding the resulting words.
"""

from __future__ import annotations

from .algebra import Poly, WordCombo, interpolate
from .indices import (
    DomainError,
    index_to_composition,
    is_admissible,
    remove_and_subtract,
    subset_families,
    validate_composition,
    word_to_composition,
    word_to_index,
)

_MEMO: dict[tuple, WordCombo] = {}

# (A-parity, minimum #A+#B, sign of (-1)^{#B} in the branch, suffix has leading y)
_BRANCHES = (
    ("even_odd", 1, -1, False),
    ("even_odd", 2, -1, True),
    ("odd_even", 2, 1, True),
)


def drop_ones(c) -> WordCombo:
    """Expand the word of a composition into the all-ge-2 span.

    Recurses over legal (A, B) subset pairs, removing value-1 positions in A,
    lowering the value->1 positions in B, and appending an x-block (or yx-block)
    suffix of length #A+#B; memoized by composition.
    """
    c = tuple(c)
    cached = _MEMO.get(c)
    if cached is not None:
        return cached
    validate_composition(c)
    if not c:
        result = WordCombo.unit()
        _MEMO[c] = result
        return result

    families = subset_families(c)
    acc = {}
    for parity, min_card, b_sign, leading_y in _BRANCHES:
        for a_set, b_set in families[parity]:
            card = len(a_set) + len(b_set)
            if card < min_card:
                continue
            sign = b_sign if len(b_set) % 2 == 0 else -b_sign
            suffix = ("y" + "x" * (card - 1)) if leading_y else "x" * card
            sub = drop_ones(remove_and_subtract(c, a_set, b_set))
            for w, coeff in sub.terms.items():
                key = w + suffix
                value = acc.get(key, 0) + sign * coeff.constant_value()
                if value:
                    acc[key] = value
                else:
                    acc.pop(key, None)
    result = WordCombo({w: Poly.const(v) for w, v in acc.items()})
    _MEMO[c] = result
    return result


def normal_form(a: WordCombo) -> WordCombo:
    """Linear extension of drop_ones over an admissible-span combination."""
    out = WordCombo.zero()
    for w, coeff in a.terms.items():
        if w == "":
            out = out + WordCombo({"": coeff})
            continue
        try:
            c = word_to_composition(w)
        except DomainError:
            raise DomainError(f"normal_form needs admissible support, got {w!r}")
        out = out + drop_ones(c).scale(coeff)
    return out


def reduces_to_zero(a: WordCombo) -> bool:
    """Whether the combination lies in the kernel of the rewriting."""
    return not normal_form(a)


def expand_index(k):
    """Integer coefficients of an admissible index over the ge-2 indices.

    Returns a dict mapping indices with all entries >= 2 (same weight as k)
    to integers.
    """
    k = tuple(k)
    if not k or not is_admissible(k):
        raise DomainError(f"expand_index needs a nonempty admissible index, got {k}")
    combo = drop_ones(index_to_composition(k))
    weight = sum(k)
    out = {}
    for w, coeff in combo.terms.items():
        value = coeff.constant_value()
        if value.denominator != 1:
            raise AssertionError(f"non-integer coefficient {value} for {w!r}")
        index = word_to_index(w)
        if sum(index) != weight or any(ki < 2 for ki in index):
            raise AssertionError(f"expansion of {k} left the ge-2 span: {index}")
        out[index] = int(value)
    return out


def expand_interpolated(k):
    """Z[t] coefficients of an admissible index over the ge-2 indices.

    Conjugates the rewriting by the t-coarsening substitution: interpolate
    with +t, rewrite, then interpolate with -t.  Specializing t = 0 recovers
    expand_index.
    """
    k = tuple(k)
    if not k or not is_admissible(k):
        raise DomainError(f"expand_interpolated needs an admissible index, got {k}")
    combo = interpolate(WordCombo.from_index(k), +1)
    combo = normal_form(combo)
    combo = interpolate(combo, -1)
    out = {}
    for w, coeff in combo.terms.items():
        if not coeff.is_integral():
            raise AssertionError(f"non-integral t-coefficient {coeff!r} for {w!r}")
        index = word_to_index(w)
        if any(ki < 2 for ki in index):
            raise AssertionError(f"t-expansion of {k} left the ge-2 span: {index}")
        out[index] = coeff
    return out


def clear_cache() -> None:
    _MEMO.clear()
