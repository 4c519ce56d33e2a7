"""Indices, two-letter words, and run-length compositions.

Conventions used across the package:

* an *index* is a tuple of positive integers ``(k_1, ..., k_r)``; the empty
  tuple is allowed and has weight 0,
* a *word* is a ``str`` over the alphabet ``{"x", "y"}``; the empty string is
  the unit of the word monoid,
* a *composition* is an even-length tuple of positive integers
  ``(c_1, ..., c_{2s})`` encoding the word
  ``y^c1 x^c2 ... y^c_{2s-1} x^c_{2s}``.

An index entry ``k`` corresponds to the letter block ``e_k = y x^(k-1)``, so
indices embed into words and admissible words (empty, or starting with ``y``
and ending with ``x``) correspond to compositions.
"""

from __future__ import annotations

import itertools


class DomainError(ValueError):
    """Raised when an argument is outside an operation's domain."""


# ---------------------------------------------------------------------------
# words


def e_block(k: int) -> str:
    """The word block for a single index entry: y followed by k-1 x's."""
    if k < 1:
        raise DomainError(f"index entry must be >= 1, got {k}")
    return "y" + "x" * (k - 1)


def index_to_word(k) -> str:
    return "".join(e_block(ki) for ki in k)


def word_to_index(w: str):
    """Decode a word into an index; the word must be empty or start with y."""
    if not w:
        return ()
    if w[0] != "y":
        raise DomainError(f"word {w!r} does not decode to an index (leading x)")
    entries = []
    run = 0
    for ch in w:
        if ch == "y":
            if run:
                entries.append(run)
            run = 1
        elif ch == "x":
            run += 1
        else:
            raise DomainError(f"bad letter {ch!r} in word {w!r}")
    entries.append(run)
    return tuple(entries)


def word_is_admissible(w: str) -> bool:
    """Empty, or starts with y and ends with x (lies in the admissible span)."""
    return w == "" or (w[0] == "y" and w[-1] == "x")


def word_in_h1(w: str) -> bool:
    """Empty, or starts with y (decodes to an index)."""
    return w == "" or w[0] == "y"


def word_in_ge2(w: str) -> bool:
    """Every y immediately followed by x: the word of an all-ge-2 index."""
    if w == "":
        return True
    if w[0] != "y" or w[-1] == "y":
        return False
    return "yy" not in w


def word_to_composition(w: str):
    """Run-length encode an admissible word into an even-length composition."""
    if not word_is_admissible(w):
        raise DomainError(f"word {w!r} is not admissible")
    runs = []
    for letter, group in itertools.groupby(w):
        runs.append(len(tuple(group)))
    return tuple(runs)


def composition_to_word(c) -> str:
    validate_composition(c)
    out = []
    for pos, run in enumerate(c):
        out.append(("y" if pos % 2 == 0 else "x") * run)
    return "".join(out)


def validate_composition(c) -> None:
    if len(c) % 2:
        raise DomainError(f"composition {c} has odd length")
    if any(ci < 1 for ci in c):
        raise DomainError(f"composition {c} has a non-positive entry")


def composition_to_index(c):
    """Decode (c1,...,c_{2s}) into ({1}^(c1-1), c2+1, ..., {1}^(c_{2s-1}-1), c_{2s}+1)."""
    validate_composition(c)
    entries = []
    for s in range(0, len(c), 2):
        entries.extend([1] * (c[s] - 1))
        entries.append(c[s + 1] + 1)
    return tuple(entries)


def index_to_composition(k):
    return word_to_composition(index_to_word(k))


# ---------------------------------------------------------------------------
# index statistics and classes


def validate_index(k) -> None:
    if any(ki < 1 for ki in k):
        raise DomainError(f"index {k} has a non-positive entry")


def index_stats(k):
    """(weight, depth, height) of an index."""
    validate_index(k)
    return sum(k), len(k), sum(1 for ki in k if ki > 1)


def is_admissible(k) -> bool:
    validate_index(k)
    return len(k) == 0 or k[-1] >= 2


def classify(k):
    """(admissible?, all entries >= 2?, all entries in {2,3}?)."""
    validate_index(k)
    admissible = is_admissible(k)
    ge2 = admissible and all(ki >= 2 for ki in k)
    hoffman = ge2 and all(ki in (2, 3) for ki in k)
    return admissible, ge2, hoffman


def canonical_key(k):
    """Sort key: weight, then depth, then entries lexicographically."""
    return (sum(k), len(k), k)


def enumerate_class(weight: int, cls: str):
    """All indices of the given weight in a class, canonically ordered.

    cls is one of "adm" (admissible), "ge2" (all entries >= 2) or
    "hoffman" (all entries in {2, 3}).
    """
    if weight < 2:
        raise DomainError(f"weight must be >= 2, got {weight}")
    if cls == "adm":
        entry_min, entry_set = 1, None
    elif cls == "ge2":
        entry_min, entry_set = 2, None
    elif cls == "hoffman":
        entry_min, entry_set = 2, (2, 3)
    else:
        raise DomainError(f"unknown index class {cls!r}")

    out = []

    def extend(prefix, remaining):
        if remaining == 0:
            if prefix and prefix[-1] >= 2:
                out.append(tuple(prefix))
            return
        for entry in range(entry_min, remaining + 1):
            if entry_set is not None and entry not in entry_set:
                continue
            prefix.append(entry)
            extend(prefix, remaining - entry)
            prefix.pop()

    extend([], weight)
    out.sort(key=canonical_key)
    return out


# ---------------------------------------------------------------------------
# dualities and the refinement order


def hoffman_dual(k):
    """Swap the roles of "," and "+" in the all-ones rendering of an index."""
    validate_index(k)
    if not k:
        raise DomainError("hoffman_dual is undefined on the empty index")
    # separators between wt(k) ones: "+" inside an entry, "," between entries
    seps = []
    for ki in k:
        seps.extend(["+"] * (ki - 1))
        seps.append(",")
    seps.pop()
    entries = []
    current = 1
    for sep in seps:
        if sep == ",":  # swapped: original comma becomes a plus
            current += 1
        else:
            entries.append(current)
            current = 1
    entries.append(current)
    return tuple(entries)


def mzv_dual(k):
    """Reverse the word of an admissible index and exchange x with y."""
    validate_index(k)
    if not k or not is_admissible(k):
        raise DomainError(f"mzv_dual needs a nonempty admissible index, got {k}")
    flipped = "".join("y" if ch == "x" else "x" for ch in reversed(index_to_word(k)))
    return word_to_index(flipped)


def merge_at(k, gaps):
    """Coarsen an index by adding across each gap i in ``gaps`` (1-based)."""
    entries = []
    for i, ki in enumerate(k, start=1):
        if entries and (i - 1) in gaps:
            entries[-1] += ki
        else:
            entries.append(ki)
    return tuple(entries)


def coarsenings(k):
    """All 2^(dep-1) indices obtained by merging adjacent entries of k."""
    validate_index(k)
    if not k:
        raise DomainError("coarsenings is undefined on the empty index")
    r = len(k)
    out = []
    for bits in range(1 << (r - 1)):
        gaps = {i + 1 for i in range(r - 1) if bits >> i & 1}
        out.append(merge_at(k, gaps))
    out = sorted(set(out), key=canonical_key)
    return out


def refines(d, b) -> bool:
    """True when b is a coarsening of d (b is obtained by merging runs of d)."""
    return tuple(b) in coarsenings(tuple(d))


# ---------------------------------------------------------------------------
# composition surgery for the rewriting recurrence


def one_positions(c):
    """1-based positions of entries equal to 1."""
    return tuple(i for i, ci in enumerate(c, start=1) if ci == 1)


def big_positions(c):
    """1-based positions of entries greater than 1."""
    return tuple(i for i, ci in enumerate(c, start=1) if ci > 1)


def remove_and_subtract(c, delete, lower):
    """Delete the positions in ``delete`` and subtract 1 at those in ``lower``.

    Positions are 1-based in the original numbering; ``delete`` must point at
    entries equal to 1 and ``lower`` at entries greater than 1.
    """
    delete = frozenset(delete)
    lower = frozenset(lower)
    for i in delete:
        if c[i - 1] != 1:
            raise DomainError(f"cannot delete position {i} of {c}: entry is not 1")
    for i in lower:
        if c[i - 1] <= 1:
            raise DomainError(f"cannot lower position {i} of {c}: entry is 1")
    if delete & lower:
        raise DomainError("delete and lower sets overlap")
    return tuple(
        ci - (1 if i in lower else 0)
        for i, ci in enumerate(c, start=1)
        if i not in delete
    )


def _pair_unions(pairs):
    """All unions of subsets of a list of disjoint position pairs."""
    out = []
    for take in range(len(pairs) + 1):
        for chosen in itertools.combinations(pairs, take):
            out.append(frozenset(p for pair in chosen for p in pair))
    return out


def subset_families(c):
    """Per-branch legal (A, B) choices for the rewriting recurrence.

    Returns a dict with keys "even_odd" and "odd_even".  In each family A is a
    disjoint union of adjacent position pairs ({2r, 2r+1} for even_odd,
    {2r-1, 2r} for odd_even) inside the value-1 positions, and B is a subset
    of the value->1 positions avoiding the same-shaped adjacent pair.
    Cardinality filters are left to the caller.
    """
    validate_composition(c)
    ones = set(one_positions(c))
    bigs = big_positions(c)
    s = len(c) // 2
    families = {}
    for parity, pair_list in (
        ("even_odd", [(2 * r, 2 * r + 1) for r in range(1, s)]),
        ("odd_even", [(2 * r - 1, 2 * r) for r in range(1, s + 1)]),
    ):
        a_choices = _pair_unions([p for p in pair_list if p[0] in ones and p[1] in ones])
        forbidden = [p for p in pair_list if p[0] in bigs and p[1] in bigs]
        b_choices = []
        for take in range(len(bigs) + 1):
            for chosen in itertools.combinations(bigs, take):
                bset = frozenset(chosen)
                if any(p[0] in bset and p[1] in bset for p in forbidden):
                    continue
                b_choices.append(bset)
        families[parity] = [(a, b) for a in a_choices for b in b_choices]
    return families
