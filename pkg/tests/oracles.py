"""Brute-force reference implementations used as independent oracles.

Everything here enumerates lattice points with itertools and filters
constraints directly; nothing shares code with the package's prefix-sum
kernels.  Only small parameters are feasible, which is all the tests need.
"""

import itertools
from fractions import Fraction


def subsets(items):
    items = list(items)
    for size in range(len(items) + 1):
        yield from map(frozenset, itertools.combinations(items, size))


def chain_tuples(r, lo, hi, weak_gaps):
    """(n_1..n_r) in [lo..hi]^r; gap i (between n_i and n_{i+1}, 1-based)
    is weak when i in weak_gaps, strict otherwise."""
    for tup in itertools.product(range(lo, hi + 1), repeat=r):
        if all(
            (tup[i - 1] <= tup[i]) if i in weak_gaps else (tup[i - 1] < tup[i])
            for i in range(1, r)
        ):
            yield tup


def zeta_n(k, N):
    total = Fraction(0)
    for tup in chain_tuples(len(k), 1, N - 1, set()):
        term = Fraction(1)
        for n, ki in zip(tup, k):
            term /= Fraction(n) ** ki
        total += term
    return total


def zeta_dia(k, N):
    r = len(k)
    ones = {i for i in range(1, r + 1) if k[i - 1] == 1}
    total = Fraction(0)
    for A in subsets(ones):
        for tup in chain_tuples(r, 1, N - 1, A):
            term = Fraction(1)
            for i, (n, ki) in enumerate(zip(tup, k), start=1):
                term *= Fraction(1, N - n) if i in A else Fraction(1, n**ki)
            total += term
    return total


def zeta_dia_star(k, N):
    r = len(k)
    ones = {i for i in range(1, r + 1) if k[i - 1] == 1}
    total = Fraction(0)
    for A in subsets(ones):
        for tup in itertools.product(range(1, N), repeat=r):
            ok = True
            for i in range(1, r):
                weak = (i in A) or (i + 1 not in A)
                if weak:
                    ok = ok and tup[i - 1] <= tup[i]
                else:
                    ok = ok and tup[i - 1] < tup[i]
            if not ok:
                continue
            term = Fraction(1)
            for i, (n, ki) in enumerate(zip(tup, k), start=1):
                term *= Fraction(1, N - n) if i in A else Fraction(1, n**ki)
            total += term
    return total


def block_tuples(lengths, lo, hi, boundary_rels, sentinel=None):
    """Tuples of weakly-increasing blocks; boundary_rels[j] relates block
    j-1's last variable to block j's first ("<", "<=", "="); rels[0]
    relates the first variable to the sentinel when not None."""
    blocks = []
    for length in lengths:
        blocks.append(
            [t for t in itertools.product(range(lo, hi + 1), repeat=length)
             if all(t[i] <= t[i + 1] for i in range(length - 1))]
        )
    for combo in itertools.product(*blocks):
        prev_last = sentinel if sentinel is not None else lo - 1
        ok = True
        for j, block in enumerate(combo):
            rel = boundary_rels[j]
            if rel == "<":
                ok = ok and prev_last < block[0]
            elif rel == "<=":
                ok = ok and prev_last <= block[0]
            elif rel == "=":
                ok = ok and prev_last == block[0]
            prev_last = block[-1]
            if not ok:
                break
        if ok:
            yield combo


def zeta_flat(k, N):
    total = Fraction(0)
    rels = [None] + ["<"] * (len(k) - 1)
    for blocks in block_tuples(list(k), 1, N - 1, rels):
        term = Fraction(1)
        for block in blocks:
            term *= Fraction(1, N - block[0])
            for n in block[1:]:
                term *= Fraction(1, n)
        total += term
    return total


def zeta_dia_flat(k, N):
    rels = [None]
    for i in range(1, len(k)):
        rels.append("<=" if k[i - 1] == 1 else "<")
    total = Fraction(0)
    for blocks in block_tuples(list(k), 1, N - 1, rels):
        term = Fraction(1)
        for block in blocks:
            term *= Fraction(1, N - block[0])
            for n in block[1:]:
                term *= Fraction(1, n)
        total += term
    return total


def zeta_tworow(l, k, N):
    total = Fraction(0)
    rels = [None] + ["<"] * (len(l) - 1)
    for blocks in block_tuples(list(l), 1, N - 1, rels):
        term = Fraction(1)
        for block, kj in zip(blocks, k):
            for m in block[:-1]:
                term *= Fraction(1, N - m)
            term *= Fraction(1, block[-1] ** kj)
        total += term
    return total


def zeta_flat_tworow(l, k, N):
    total = Fraction(0)
    rels = [None] + ["<"] * (len(k) - 1)
    for blocks in block_tuples(list(k), 1, N - 1, rels):
        term = Fraction(1)
        for block, li in zip(blocks, l):
            term *= Fraction(1, (N - block[0]) ** li)
            for n in block[1:]:
                term *= Fraction(1, n)
        total += term
    return total


def h_value(c, N):
    s2 = len(c)
    ones = {i for i in range(1, s2 + 1) if c[i - 1] == 1}
    total = Fraction(0)
    for A in subsets(ones):
        rels = []
        for i in range(1, s2 + 1):
            rels.append("=" if i in A else "<")
        for blocks in block_tuples(list(c), 0, N - 1, rels, sentinel=0):
            term = Fraction(1, N ** len(A))
            for pos, block in enumerate(blocks, start=1):
                if pos in A:
                    continue
                for n in block:
                    term *= Fraction(1, N - n) if pos % 2 else Fraction(1, n)
            total += term
    return total


def f_value(c, N):
    entries = []
    for s in range(0, len(c), 2):
        entries.extend([1] * (c[s] - 1))
        entries.append(c[s + 1] + 1)
    return zeta_dia(tuple(entries), N)


def F_kawashima(k, N, t):
    r = len(k)
    total = Fraction(0)
    for A in subsets(range(1, r + 1)):
        sign = Fraction(-1) ** len(A)
        for tup in itertools.product(range(1, N), repeat=r):
            ok = True
            for i in range(2, r + 1):
                if i in A:
                    ok = ok and tup[i - 2] < tup[i - 1]
                else:
                    ok = ok and tup[i - 2] <= tup[i - 1]
            if not ok:
                continue
            term = sign
            for i, (n, ki) in enumerate(zip(tup, k), start=1):
                if i in A:
                    term /= (N - n + t) ** ki
                else:
                    term /= Fraction(n) ** ki
            total += term
    return total


def binom(t, n):
    value = Fraction(1)
    for j in range(n):
        value = value * (t - j) / (j + 1)
    return value


def rising(a, n):
    value = Fraction(1)
    for j in range(n):
        value *= a + j
    return value


def G_kawashima(k, N, t):
    r = len(k)
    ones = {i for i in range(1, r + 1) if k[i - 1] == 1}
    total = Fraction(0)
    for A in subsets(ones - {r}):
        for tup in itertools.product(range(1, N), repeat=r):
            ok = True
            for i in range(1, r):
                weak = (i in A) or (i + 1 not in A)
                if weak:
                    ok = ok and tup[i - 1] <= tup[i]
                else:
                    ok = ok and tup[i - 1] < tup[i]
            if not ok:
                continue
            term = Fraction(1)
            for i, (n, ki) in enumerate(zip(tup, k), start=1):
                term *= Fraction(1, N - n + t) if i in A else Fraction(1, n**ki)
            nr = tup[-1]
            tail = (
                Fraction(-1) ** (nr - 1)
                * binom(t, nr)
                * rising(1 - N, nr)
                / rising(1 - N - t, nr)
            )
            total += term * tail
    return total


def zeta_dia_param(k, n0, N, z):
    r = len(k)
    ones = {i for i in range(1, r + 1) if k[i - 1] == 1}
    total = Fraction(0)
    for A in subsets(ones):
        for tup in itertools.product(range(n0 + 1, N + 1), repeat=r):
            full = tup + (N,)
            ok = True
            for i in range(1, r + 1):
                if i in A:
                    ok = ok and full[i - 1] <= full[i]
                else:
                    ok = ok and full[i - 1] < full[i]
            if not ok:
                continue
            term = Fraction(1)
            for i, (n, ki) in enumerate(zip(tup, k), start=1):
                term *= 1 / (z - n) if i in A else Fraction(1, n**ki)
            total += term
    return total


def connector_nn(n, m, N, t):
    if n > m or m == 0:
        return Fraction(0)
    sign = Fraction(-1) ** (n - 1)
    return (
        sign
        * n
        * binom(Fraction(m), n)
        * rising(1 - N - t, n + m)
        / (rising(1 - N - t, n) * rising(1 - N - t, m))
    )


def connected_sum(k, l, N, t):
    """Full enumeration of the coupled chains, first-position reading."""
    r, s = len(k), len(l)
    ones = {i for i in range(1, r + 1) if k[i - 1] == 1}
    total = Fraction(0)
    for A in subsets(ones):
        n_tuples = []
        for tup in itertools.product(range(1, N), repeat=r):
            ok = True
            for i in range(1, r):
                weak = (i in A) or (i + 1 not in A)
                ok = ok and (tup[i - 1] <= tup[i] if weak else tup[i - 1] < tup[i])
            if ok:
                n_tuples.append(tup)
        for B in subsets(range(1, s + 1)):
            sign = Fraction(-1) ** len(B)
            m_tuples = []
            for tup in itertools.product(range(1, N), repeat=s):
                ok = True
                for j in range(2, s + 1):
                    if j in B:
                        ok = ok and tup[j - 2] < tup[j - 1]
                    else:
                        ok = ok and tup[j - 2] <= tup[j - 1]
                if ok:
                    m_tuples.append(tup)
            for ntup in n_tuples:
                left = Fraction(1)
                for i, (n, ki) in enumerate(zip(ntup, k), start=1):
                    left *= 1 / (N - n + t) if i in A else Fraction(1, n**ki)
                nr = ntup[-1]
                for mtup in m_tuples:
                    right = sign
                    for j, (m, lj) in enumerate(zip(mtup, l), start=1):
                        if j in B:
                            right /= (N - m + t) ** lj
                        else:
                            right /= Fraction(m) ** lj
                    m1 = mtup[0]
                    shift_second = 1 in B
                    if r in A and shift_second:
                        c = (
                            (N - nr + t)
                            * (N - m1 + t)
                            / (m1 * (N - nr - m1 + t))
                            * connector_nn(nr, m1, N, t)
                        )
                    elif r in A:
                        c = (N - nr + t) / (N - nr - m1 + t) * connector_nn(nr, m1, N, t)
                    elif shift_second:
                        c = connector_nn(nr, m1 - 1, N, t)
                    else:
                        c = connector_nn(nr, m1, N, t)
                    total += left * c * right
    return total
