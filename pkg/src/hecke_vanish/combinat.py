"""Partitions, weight orbits, dominance classes, and hook-product symbols.

Weights are integer (occasionally half-integral) vectors.  The triangular
structure of the nonsymmetric eigenbasis is organised by *classes*: the
descending rearrangement (type A) or the descending rearrangement of absolute
values (type C), partially ordered by partial sums.  All solvers in
`polys.py` work class-by-class, so the utilities here enumerate classes below
an envelope and the orbit of weights inside each class.

The binomial-product symbols C0/Cminus/Cplus are the building blocks of every
closed evaluation formula in `vanishing.py`:

    C0(mu; x)     = prod over cells (i,j) of mu of (1 - q^(j-1) t^(1-i) x)
    Cminus(mu; x) = prod of (1 - q^(mu_i - j) t^(mu'_j - i) x)
    Cplus(mu; x)  = prod of (1 - q^(mu_i + j - 1) t^(2 - mu'_j - i) x)

with multi-argument versions taking products over the arguments, and the
(q, t) pair freely replaced by monomials like (q^2, t) or (q, t^2).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .params import ParamMonomial, ParamRat, ParameterField


# -- partitions -------------------------------------------------------------

def partitions(m: int, max_len: int | None = None, max_part: int | None = None):
    """All partitions of m as weakly decreasing tuples.

    >>> sorted(partitions(4))
    [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]
    >>> sorted(partitions(4, max_len=2))
    [(2, 2), (3, 1), (4,)]
    """
    if max_part is None:
        max_part = m
    if m == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(m, max_part), 0, -1):
        for rest in partitions(m - first,
                               None if max_len is None else max_len - 1, first):
            yield (first,) + rest


def conjugate(mu: tuple[int, ...]) -> tuple[int, ...]:
    """Transpose of the diagram.

    >>> conjugate((3, 1))
    (2, 1, 1)
    """
    if not mu:
        return ()
    return tuple(sum(1 for part in mu if part >= j) for j in range(1, mu[0] + 1))


def boxes(mu):
    """Cells (i, j), 1-indexed, row-major."""
    for i, part in enumerate(mu, start=1):
        for j in range(1, part + 1):
            yield i, j


def trim(mu) -> tuple:
    out = list(mu)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def mu_squared(mu) -> tuple:
    """The doubled-column partition (mu_1, mu_1, mu_2, mu_2, ...).

    >>> mu_squared((2, 1))
    (2, 2, 1, 1)
    """
    out = []
    for part in trim(mu):
        out += [part, part]
    return tuple(out)


def halve_squared(lam) -> tuple | None:
    """Inverse of mu_squared, or None if lam is not of that shape.

    >>> halve_squared((2, 2, 1, 1)), halve_squared((2, 1))
    ((2, 1), None)
    """
    lam = trim(lam)
    if len(lam) % 2:
        return None
    mu = []
    for k in range(0, len(lam), 2):
        if lam[k] != lam[k + 1]:
            return None
        mu.append(lam[k])
    return tuple(mu)


def doubled(mu) -> tuple:
    return tuple(2 * part for part in trim(mu))


def halve_doubled(lam) -> tuple | None:
    """Inverse of doubled, or None.

    >>> halve_doubled((4, 2)), halve_doubled((3, 2))
    ((2, 1), None)
    """
    lam = trim(lam)
    if any(part % 2 for part in lam):
        return None
    return tuple(part // 2 for part in lam)


# -- dominance classes ------------------------------------------------------

def sort_key_a(kappa) -> tuple:
    return tuple(sorted(kappa, reverse=True))


def sort_key_c(kappa) -> tuple:
    return tuple(sorted((abs(k) for k in kappa), reverse=True))


def psums(key) -> tuple:
    out, s = [], 0
    for part in key:
        s += part
        out.append(s)
    return tuple(out)


def class_le_a(k1, k2) -> bool:
    """Dominance on equal-sum descending tuples: k1 below-or-equal k2.

    >>> class_le_a((1, 1, 0), (2, 0, 0)), class_le_a((2, 0), (1, 1))
    (True, False)
    """
    assert len(k1) == len(k2) and sum(k1) == sum(k2)
    return all(x <= y for x, y in zip(psums(k1), psums(k2)))


def class_le_c(k1, k2) -> bool:
    """Partial-sum order on descending abs-value keys (no total constraint)."""
    assert len(k1) == len(k2)
    return all(x <= y for x, y in zip(psums(k1), psums(k2)))


def classes_below_a(lam_key) -> list[tuple]:
    """Descending equal-sum keys dominated by lam_key (entries may be < 0)."""
    n = len(lam_key)
    lo = min(lam_key + (0,))
    hi = max(lam_key + (0,))
    out = []
    for tup in itertools.combinations_with_replacement(range(hi, lo - 1, -1), n):
        if sum(tup) == sum(lam_key) and class_le_a(tup, lam_key):
            out.append(tup)
    return sorted(out, key=psums)


def classes_below_c(lam_key) -> list[tuple]:
    """Descending nonnegative keys with partial sums below lam_key's."""
    n = len(lam_key)
    hi = lam_key[0] if lam_key else 0
    out = []
    for tup in itertools.combinations_with_replacement(range(hi, -1, -1), n):
        if class_le_c(tup, lam_key):
            out.append(tup)
    return sorted(out, key=psums)


def orbit_a(key) -> list[tuple]:
    """Distinct rearrangements.

    >>> orbit_a((1, 1, 0))
    [(0, 1, 1), (1, 0, 1), (1, 1, 0)]
    """
    return sorted(set(itertools.permutations(key)))


def orbit_c(key) -> list[tuple]:
    """Distinct signed rearrangements.

    >>> orbit_c((1, 0))
    [(-1, 0), (0, -1), (0, 1), (1, 0)]
    """
    out = set()
    for perm in itertools.permutations(key):
        nz = [i for i, v in enumerate(perm) if v]
        for signs in itertools.product((1, -1), repeat=len(nz)):
            w = list(perm)
            for idx, s in zip(nz, signs):
                w[idx] = s * w[idx]
            out.add(tuple(w))
    return sorted(out)


def maximal_classes(keys, le) -> list[tuple]:
    keys = list(keys)
    return [k for k in keys
            if not any(k2 != k and le(k, k2) for k2 in keys)]


def linear_extension(keys, le) -> list[tuple]:
    """Classes sorted so that every class appears after all classes above it."""
    return sorted(keys, key=lambda k: (tuple(-p for p in psums(k)), k))


# -- hook-product symbols ----------------------------------------------------

def _one_minus(field: ParameterField, m: ParamMonomial) -> ParamRat:
    return field.one() - field.monomial(m)


def c_symbol(kind: str, mu, args, field: ParameterField,
             q: ParamMonomial | None = None,
             t: ParamMonomial | None = None) -> ParamRat:
    """C0 ("0"), Cminus ("-") or Cplus ("+") of a partition at the given args.

    `args` is a ParamMonomial or an iterable of them; `q`, `t` default to the
    plain symbols and may be any signed monomials (e.g. q^2 or t^2).
    """
    mu = trim(mu)
    if q is None:
        q = ParamMonomial.gen("q")
    if t is None:
        t = ParamMonomial.gen("t")
    if isinstance(args, ParamMonomial):
        args = (args,)
    mu_c = conjugate(mu)
    out = field.one()
    for x in args:
        for i, j in boxes(mu):
            if kind == "0":
                m = (q ** (j - 1)) * (t ** (1 - i)) * x
            elif kind == "-":
                m = (q ** (mu[i - 1] - j)) * (t ** (mu_c[j - 1] - i)) * x
            elif kind == "+":
                m = (q ** (mu[i - 1] + j - 1)) * (t ** (2 - mu_c[j - 1] - i)) * x
            else:
                raise ValueError(kind)
            out = out * _one_minus(field, m)
    return out


# -- public weight/partition types -------------------------------------------

#: Weakly decreasing tuple of non-negative integers.
Partition = tuple
#: Arbitrary tuple of integers (or rationals for coset weights).
Composition = tuple

#: Alias: 2*mu doubles every part (conjugate-dual of mu_squared).
two_mu = doubled


@dataclass(frozen=True)
class Weight:
    """A rational weight vector whose entries differ by integers.

    `coset_denominator` is the common denominator of the entries (1 for
    integral weights, 2 for half-integral ones, n for the det^(1/n) twists).

    >>> Weight.make((Fraction(3, 2), Fraction(1, 2))).coset_denominator
    2
    >>> Weight.parse("3/2,1/2").entries
    (Fraction(3, 2), Fraction(1, 2))
    """

    entries: tuple
    coset_denominator: int = 1

    def __post_init__(self):
        for e in self.entries:
            assert Fraction(e).denominator in (1, self.coset_denominator) or \
                self.coset_denominator % Fraction(e).denominator == 0
        for e in self.entries[1:]:
            assert (Fraction(e) - Fraction(self.entries[0])).denominator == 1, \
                "weight entries must differ by integers"

    @classmethod
    def make(cls, entries) -> "Weight":
        ent = tuple(Fraction(e) for e in entries)
        den = 1
        for e in ent:
            den = den * e.denominator // math.gcd(den, e.denominator)
        return cls(ent, den)

    @classmethod
    def parse(cls, text: str) -> "Weight":
        return cls.make(Fraction(part.strip()) for part in text.split(","))

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


def dominance_leq(nu, kappa) -> bool:
    """Dominance comparison of the decreasing sorts of two compositions.

    Requires equal totals (raises ValueError otherwise); true iff every
    partial sum of nu+ is <= the matching partial sum of kappa+.

    >>> dominance_leq((1, 1), (2, 0))
    True
    >>> dominance_leq((2, 0), (1, 1))
    False
    >>> dominance_leq((0, 2, 1), (2, 1, 0))
    True
    """
    a = sorted(nu, reverse=True)
    b = sorted(kappa, reverse=True)
    while len(a) < len(b):
        a.append(0)
    while len(b) < len(a):
        b.append(0)
    if sum(a) != sum(b):
        raise ValueError("dominance comparison needs equal totals")
    run_a = run_b = 0
    for x, y in zip(a, b):
        run_a += x
        run_b += y
        if run_a > run_b:
            return False
    return True


if __name__ == "__main__":
    import doctest
    doctest.testmod()
