"""Formal linear combinations of two-letter words with exact coefficients.

Coefficients live in Q[t]: a :class:`Poly` is a univariate polynomial in the
interpolation variable t with Fraction coefficients, and plain rationals are
the degree-0 polynomials.  A :class:`WordCombo` is a finite linear combination
of words; zero coefficients are never stored.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .indices import (
    DomainError,
    coarsenings,
    e_block,
    index_to_word,
    word_in_ge2,
    word_in_h1,
    word_is_admissible,
    word_to_index,
)


class Poly:
    """Polynomial in the interpolation variable t over exact rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [Fraction(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def const(cls, q) -> "Poly":
        return cls((Fraction(q),))

    @classmethod
    def monomial(cls, q, degree: int) -> "Poly":
        return cls((0,) * degree + (Fraction(q),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise DomainError(f"coefficient {self} depends on t")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other) -> "Poly":
        other = as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "Poly":
        return self + (-as_poly(other))

    def __mul__(self, other) -> "Poly":
        other = as_poly(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return POLY_ZERO
        if len(a) == 1 and len(b) == 1:
            return Poly((a[0] * b[0],))
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __call__(self, t) -> Fraction:
        t = Fraction(t)
        value = Fraction(0)
        for c in reversed(self.coeffs):
            value = value * t + c
        return value

    def as_strings(self):
        """Coefficients by ascending degree, each rendered as "p/q" or "p"."""
        if not self.coeffs:
            return ["0"]
        return [str(c) for c in self.coeffs]

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for n, c in enumerate(self.coeffs):
            if not c:
                continue
            if n == 0:
                parts.append(str(c))
            else:
                tn = "t" if n == 1 else f"t^{n}"
                parts.append(tn if c == 1 else f"{c}*{tn}")
        return " + ".join(parts)


POLY_ZERO = Poly()
POLY_ONE = Poly.const(1)
POLY_T = Poly.monomial(1, 1)


def as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly.const(x)
    raise DomainError(f"cannot coerce {x!r} to a coefficient")


class WordCombo:
    """Finite linear combination of words with Poly coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for w, c in terms.items():
                c = as_poly(c)
                if c:
                    clean[w] = c
        self.terms = clean

    @classmethod
    def zero(cls) -> "WordCombo":
        return cls()

    @classmethod
    def unit(cls) -> "WordCombo":
        return cls({"": POLY_ONE})

    @classmethod
    def from_word(cls, w: str, coeff=1) -> "WordCombo":
        return cls({w: coeff})

    @classmethod
    def from_index(cls, k, coeff=1) -> "WordCombo":
        return cls({index_to_word(k): coeff})

    def items(self):
        """Terms sorted by (length, word) for deterministic iteration."""
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def support(self):
        return sorted(self.terms, key=lambda w: (len(w), w))

    def coefficient(self, w: str) -> Poly:
        return self.terms.get(w, POLY_ZERO)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WordCombo):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> "WordCombo":
        out = dict(self.terms)
        for w, c in other.terms.items():
            c = c + out.get(w, POLY_ZERO)
            if c:
                out[w] = c
            else:
                out.pop(w, None)
        combo = WordCombo.__new__(WordCombo)
        combo.terms = out
        return combo

    def __neg__(self) -> "WordCombo":
        combo = WordCombo.__new__(WordCombo)
        combo.terms = {w: -c for w, c in self.terms.items()}
        return combo

    def __sub__(self, other) -> "WordCombo":
        return self + (-other)

    def scale(self, scalar) -> "WordCombo":
        scalar = as_poly(scalar)
        if not scalar:
            return WordCombo.zero()
        return WordCombo({w: c * scalar for w, c in self.terms.items()})

    __mul__ = scale
    __rmul__ = scale

    def concat(self, suffix: str) -> "WordCombo":
        """Right-multiply every word of the support by a fixed word."""
        if not suffix:
            return self
        combo = WordCombo.__new__(WordCombo)
        combo.terms = {w + suffix: c for w, c in self.terms.items()}
        return combo

    def in_h1(self) -> bool:
        return all(word_in_h1(w) for w in self.terms)

    def in_h0(self) -> bool:
        return all(word_is_admissible(w) for w in self.terms)

    def in_ge2(self) -> bool:
        return all(word_in_ge2(w) for w in self.terms)

    def is_homogeneous(self):
        """Common word length of the support, or None if mixed/empty."""
        lengths = {len(w) for w in self.terms}
        if len(lengths) == 1:
            return lengths.pop()
        return None

    def is_integral(self) -> bool:
        return all(c.is_integral() for c in self.terms.values())

    def constant_coefficients(self):
        """{word: Fraction}; raises DomainError if any coefficient involves t."""
        return {w: c.constant_value() for w, c in self.terms.items()}

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.items():
            name = w if w else "1"
            parts.append(f"({c!r})*{name}")
        return " + ".join(parts)

    def to_json_dict(self) -> dict:
        """{letter-string: coefficient}; constants as "p/q" strings,
        genuine polynomials as lists of "p/q" by ascending degree."""
        out = {}
        for w, c in self.items():
            out[w] = str(c.constant_value()) if c.is_constant() else c.as_strings()
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> "WordCombo":
        terms = {}
        for w, c in data.items():
            if isinstance(c, str):
                terms[w] = Poly.const(Fraction(c))
            else:
                terms[w] = Poly(Fraction(q) for q in c)
        return cls(terms)


def combo_from_ints(pairs) -> WordCombo:
    out = {}
    for w, c in pairs:
        out[w] = out.get(w, 0) + c
    return WordCombo({w: Poly.const(c) for w, c in out.items() if c})


# ---------------------------------------------------------------------------
# products on words


def split_last_block(w: str):
    """Split a nonempty word of yH as (prefix, k) with w = prefix + e_block(k)."""
    pos = w.rfind("y")
    if pos < 0:
        raise DomainError(f"word {w!r} has no y block")
    return w[:pos], len(w) - pos


@lru_cache(maxsize=None)
def _quasi_shuffle(u: str, v: str, merge_sign: int):
    """Quasi-shuffle of two yH words as a tuple of (word, int) pairs.

    merge_sign +1 gives the harmonic product, -1 the star-harmonic variant.
    """
    if u == "":
        return ((v, 1),)
    if v == "":
        return ((u, 1),)
    if v < u:  # both products are commutative
        return _quasi_shuffle(v, u, merge_sign)
    u1, k1 = split_last_block(u)
    v1, k2 = split_last_block(v)
    acc = {}
    for word, coeff, suffix in itertools.chain(
        ((w, c, e_block(k1)) for w, c in _quasi_shuffle(u1, v, merge_sign)),
        ((w, c, e_block(k2)) for w, c in _quasi_shuffle(u, v1, merge_sign)),
        (
            (w, c * merge_sign, e_block(k1 + k2))
            for w, c in _quasi_shuffle(u1, v1, merge_sign)
        ),
    ):
        key = word + suffix
        acc[key] = acc.get(key, 0) + coeff
    return tuple(sorted((w, c) for w, c in acc.items() if c))


def _bilinear(a: WordCombo, b: WordCombo, word_product) -> WordCombo:
    out = {}
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            scalar = cu * cv
            for w, c in word_product(u, v):
                prev = out.get(w, POLY_ZERO) + scalar * c
                if prev:
                    out[w] = prev
                else:
                    out.pop(w, None)
    combo = WordCombo.__new__(WordCombo)
    combo.terms = out
    return combo


def _require_h1(a: WordCombo, what: str) -> None:
    for w in a.terms:
        if not word_in_h1(w):
            raise DomainError(f"{what} needs support in the index span, got {w!r}")


def harmonic_product(a: WordCombo, b: WordCombo) -> WordCombo:
    """The quasi-shuffle product; summing merged blocks with sign +1."""
    _require_h1(a, "harmonic_product")
    _require_h1(b, "harmonic_product")
    return _bilinear(a, b, lambda u, v: _quasi_shuffle(u, v, 1))


def star_harmonic_product(a: WordCombo, b: WordCombo) -> WordCombo:
    """Quasi-shuffle with the merged-block term subtracted instead of added."""
    _require_h1(a, "star_harmonic_product")
    _require_h1(b, "star_harmonic_product")
    return _bilinear(a, b, lambda u, v: _quasi_shuffle(u, v, -1))


def _circled_words(u: str, v: str):
    if u == "" or v == "":
        raise DomainError("the block-merging product is undefined on the unit")
    u1, k1 = split_last_block(u)
    v1, k2 = split_last_block(v)
    return tuple(
        (w + e_block(k1 + k2), c) for w, c in _quasi_shuffle(u1, v1, 1)
    )


def circled_product(a: WordCombo, b: WordCombo) -> WordCombo:
    """Merge the final blocks: u e_j (.) v e_k = (u * v) e_{j+k}."""
    _require_h1(a, "circled_product")
    _require_h1(b, "circled_product")
    return _bilinear(a, b, _circled_words)


@lru_cache(maxsize=None)
def _phi_word(w: str):
    """Image of a word under the substitution x -> x + y, y -> -y."""
    terms = {"": 1}
    for ch in w:
        new = {}
        for u, c in terms.items():
            if ch == "x":
                new[u + "x"] = new.get(u + "x", 0) + c
                new[u + "y"] = new.get(u + "y", 0) + c
            else:
                new[u + "y"] = new.get(u + "y", 0) - c
        terms = new
    return tuple(sorted(terms.items()))


def phi(a: WordCombo) -> WordCombo:
    """The ring automorphism x -> x + y, y -> -y, applied letterwise."""
    return _bilinear(a, WordCombo.unit(), lambda u, _v: _phi_word(u))


def star_sum(w: str) -> WordCombo:
    """Sum of the words of all coarsenings of the index of w, coefficient 1."""
    if not w:
        raise DomainError("star_sum is undefined on the unit")
    k = word_to_index(w)
    return combo_from_ints((index_to_word(l), 1) for l in coarsenings(k))


def interpolate(a: WordCombo, sign: int) -> WordCombo:
    """Wordwise coarsening sum with coefficients (sign*t)^(depth drop).

    interpolate(., +1) and interpolate(., -1) are mutually inverse.
    """
    if sign not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign}")
    out = WordCombo.zero()
    for w, c in a.terms.items():
        k = word_to_index(w)
        expanded = {}
        for l in coarsenings(k) if k else [()]:
            drop = len(k) - len(l)
            monomial = Poly.monomial(1 if sign > 0 or drop % 2 == 0 else -1, drop)
            wl = index_to_word(l)
            expanded[wl] = expanded.get(wl, POLY_ZERO) + monomial
        out = out + WordCombo({w2: c * c2 for w2, c2 in expanded.items()})
    return out
