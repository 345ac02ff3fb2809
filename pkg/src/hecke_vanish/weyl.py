"""Extended affine symmetric groups, hyperoctahedral subgroups, chambers.

Elements of the extended affine symmetric group on n letters are bijections
w of the integers with w(x + n) = w(x) + n, acting on Z from the *right*, so
the group product u·v applies u first: (u·v)(x) = v(u(x)).  An element is
stored by its window (w(1), ..., w(n)).  Generators: s_j swaps the residue
classes of j and j+1 (s_0 wraps around), and the rotation pi(x) = x + 1.

Facts used throughout (all doctested below):

* length:    len(w) = sum over 1<=i<j<=n of |floor((w(j)-w(i))/n)|
* descent:   w has a left descent at i iff w(i) > w(i+1), with w(0) read as
             w(n) - n; peeling left descents yields a reduced word with a
             power of pi left over.
* translations: tau_nu has window (i + n*nu_i); tau_{e_1} = s_1 s_2 ... s_{n-1} pi.

The type C affine group on n letters is realized inside the group on 2n
letters as the bijections with the extra symmetry w(2n+1-i) = 2n+1-w(i);
its generators are c_0 = s_0, c_n = s_n, and c_j = s_j s_{2n-j} for 0<j<n.

Chambers of the finite Weyl group (permutations v of 1..n) carry the sign
cocycle: a letter whose finite root image is r contributes U(s)^{+1} when
v^{-1}(r) is a positive root, and processing a word left to right updates
v by right multiplication with the letter's finite image.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


# === finite permutations (windows = tuples of values on 1..n) ==============

def fin_identity(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def fin_compose(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    """Group product u·v, u applied first: x -> v(u(x)).

    >>> fin_compose((2, 1, 3), (1, 3, 2))
    (3, 1, 2)
    """
    return tuple(v[u[i] - 1] for i in range(len(u)))


def fin_inverse(u: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(u)
    for i, x in enumerate(u):
        out[x - 1] = i + 1
    return tuple(out)


def fin_length(u: tuple[int, ...]) -> int:
    """Inversion count.

    >>> fin_length((3, 1, 2))
    2
    """
    n = len(u)
    return sum(1 for i in range(n) for j in range(i + 1, n) if u[i] > u[j])


def fin_simple(n: int, i: int) -> tuple[int, ...]:
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def fin_reduced_word(u: tuple[int, ...]) -> list[int]:
    """Reduced word (letters 1..n-1), leftmost letter first.

    >>> fin_reduced_word((3, 1, 2))
    [1, 2]
    """
    word = []
    w = list(u)
    for _ in range(len(u) * len(u)):
        for i in range(len(u) - 1):
            if w[i] > w[i + 1]:
                word.append(i + 1)
                w[i], w[i + 1] = w[i + 1], w[i]
                break
        else:
            break
    assert list(w) == list(range(1, len(u) + 1))
    # peeling position swaps off the left gives u = s_{i_1}···s_{i_k} read
    # in collection order
    return word


# === affine permutations =====================================================

@dataclass(frozen=True)
class AffinePerm:
    """Extended affine permutation in window notation."""

    n: int
    window: tuple[int, ...]

    def __post_init__(self):
        assert len(self.window) == self.n
        assert sorted(x % self.n for x in self.window) == list(range(self.n))

    @classmethod
    def identity(cls, n: int) -> "AffinePerm":
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, n: int, j: int) -> "AffinePerm":
        """s_j for 0 <= j <= n-1.

        >>> AffinePerm.simple(3, 0).window
        (0, 2, 4)
        """
        w = list(range(1, n + 1))
        if j == 0:
            w[0], w[n - 1] = 0, n + 1
        else:
            w[j - 1], w[j] = j + 1, j
        return cls(n, tuple(w))

    @classmethod
    def rotation(cls, n: int, k: int = 1) -> "AffinePerm":
        """pi^k, window (1+k, ..., n+k)."""
        return cls(n, tuple(i + k for i in range(1, n + 1)))

    @classmethod
    def translation(cls, nu) -> "AffinePerm":
        """tau_nu with window (i + n*nu_i).

        >>> AffinePerm.translation((1, 0)).window
        (3, 2)
        """
        n = len(nu)
        return cls(n, tuple(i + 1 + n * nu[i] for i in range(n)))

    @classmethod
    def from_finite(cls, v: tuple[int, ...]) -> "AffinePerm":
        return cls(len(v), v)

    def __call__(self, x: int) -> int:
        r = (x - 1) % self.n + 1
        return self.window[r - 1] + (x - r)

    def __mul__(self, other: "AffinePerm") -> "AffinePerm":
        """Group product, self applied first."""
        if not isinstance(other, AffinePerm):
            return NotImplemented
        assert self.n == other.n
        return AffinePerm(self.n, tuple(other(self(i))
                                        for i in range(1, self.n + 1)))

    def inverse(self) -> "AffinePerm":
        out = [0] * self.n
        for i in range(1, self.n + 1):
            x = self(i)
            r = (x - 1) % self.n + 1
            out[r - 1] = i + (r - x)
        return AffinePerm(self.n, tuple(out))

    def length(self) -> int:
        """Coxeter length.

        >>> AffinePerm.simple(2, 0).length()
        1
        >>> AffinePerm.translation((1, 0, 0)).length()
        2
        """
        n, w = self.n, self.window
        return sum(abs((w[j] - w[i]) // n)
                   for i in range(n) for j in range(i + 1, n))

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.n + 1))

    def left_descents(self) -> list[int]:
        """Indices j in 0..n-1 with w(j) > w(j+1), reading w(0) = w(n) - n."""
        w = self.window
        out = [j for j in range(1, self.n) if w[j - 1] > w[j]]
        if self.n >= 2 and w[self.n - 1] - self.n > w[0]:
            out.insert(0, 0)
        return out

    def reduced_word(self) -> tuple[list[int], int]:
        """(letters, k) with self = s_{letters[0]} ··· s_{letters[-1]} · pi^k.

        >>> AffinePerm.translation((1, 0)).reduced_word()
        ([1], 1)
        >>> AffinePerm.translation((2, 0)).reduced_word()
        ([1, 0], 2)
        """
        word: list[int] = []
        w = self
        for _ in range(w.length() + 1):
            ds = w.left_descents()
            if not ds:
                break
            j = ds[0]
            word.append(j)
            w = AffinePerm.simple(self.n, j) * w
        assert not w.left_descents()
        k = w.window[0] - 1
        assert w.window == tuple(i + k for i in range(1, self.n + 1)), \
            "residual element is not a rotation"
        return word, k

    def finite_part(self) -> tuple[int, ...]:
        """Image permutation in S_n (residues of the window)."""
        return tuple((x - 1) % self.n + 1 for x in self.window)


def word_to_element(n: int, letters, k: int = 0) -> AffinePerm:
    """Evaluate s_{letters[0]} ··· s_{letters[-1]} pi^k.

    >>> word_to_element(2, [1], 1) == AffinePerm.translation((1, 0))
    True
    """
    w = AffinePerm.identity(n)
    for j in letters:
        w = w * AffinePerm.simple(n, j)
    return w * AffinePerm.rotation(n, k) if k else w


# === type C inside the doubled group ========================================

@dataclass(frozen=True)
class TypeCPerm:
    """Affine hyperoctahedral element as a symmetric window of size 2n."""

    n: int
    perm: AffinePerm

    def __post_init__(self):
        m = 2 * self.n
        assert self.perm.n == m
        for i in range(1, m + 1):
            assert self.perm(m + 1 - i) == m + 1 - self.perm(i), \
                "window violates the type C symmetry"

    @classmethod
    def identity(cls, n: int) -> "TypeCPerm":
        return cls(n, AffinePerm.identity(2 * n))

    @classmethod
    def simple(cls, n: int, j: int) -> "TypeCPerm":
        """c_j for 0 <= j <= n.

        >>> TypeCPerm.simple(1, 0).perm.window
        (0, 3)
        """
        m = 2 * n
        assert 0 <= j <= n
        if j == 0:
            w = AffinePerm.simple(m, 0)
        elif j == n:
            w = AffinePerm.simple(m, n)
        else:
            w = AffinePerm.simple(m, j) * AffinePerm.simple(m, m - j)
        return cls(n, w)

    @classmethod
    def translation(cls, nu) -> "TypeCPerm":
        """tau_nu for a length-n weight, via the doubled weight (nu, -rev nu).

        >>> TypeCPerm.translation((1,)).perm.window
        (3, 0)
        """
        n = len(nu)
        hat = tuple(nu) + tuple(-v for v in reversed(nu))
        return cls(n, AffinePerm.translation(hat))

    def __mul__(self, other: "TypeCPerm") -> "TypeCPerm":
        if not isinstance(other, TypeCPerm):
            return NotImplemented
        return TypeCPerm(self.n, self.perm * other.perm)

    def inverse(self) -> "TypeCPerm":
        return TypeCPerm(self.n, self.perm.inverse())

    def is_identity(self) -> bool:
        return self.perm.is_identity()

    def left_descents(self) -> list[int]:
        """j in 0..n with w(j) > w(j+1) (w(0) = w(2n) - 2n)."""
        w = self.perm
        out = []
        if w.window[2 * self.n - 1] - 2 * self.n > w.window[0]:
            out.append(0)
        out += [j for j in range(1, self.n + 1)
                if w.window[j - 1] > w.window[j]]
        return out

    def reduced_word(self) -> list[int]:
        """Letters 0..n, leftmost first; no rotation remainder exists here.

        >>> TypeCPerm.translation((1,)).reduced_word()
        [1, 0]
        """
        word: list[int] = []
        w = self
        for _ in range(self.perm.length() + 1):
            ds = w.left_descents()
            if not ds:
                break
            j = ds[0]
            word.append(j)
            w = TypeCPerm.simple(self.n, j) * w
        assert w.is_identity(), "type C peeling must end at the identity"
        return word


# === signed permutations (finite hyperoctahedral group) =====================

def sgn_identity(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def sgn_compose(u, v) -> tuple[int, ...]:
    """u applied first; entries are signed values on 1..n."""
    def act(w, x):
        return w[x - 1] if x > 0 else -w[-x - 1]
    return tuple(act(v, act(u, i)) for i in range(1, len(u) + 1))


def sgn_length(u) -> int:
    """Root-counting length for C_n with s_n negating the last coordinate.

    >>> sgn_length((1, -2)), sgn_length((-1, 2))
    (1, 3)
    """
    n = len(u)
    total = sum(1 for v in u if v < 0)
    for i in range(n):
        for j in range(i + 1, n):
            si, vi = (1, u[i]) if u[i] > 0 else (-1, -u[i])
            sj, vj = (1, u[j]) if u[j] > 0 else (-1, -u[j])
            # e_i - e_j -> si e_vi - sj e_vj
            if _root_neg(si, vi, sj, vj):
                total += 1
            # e_i + e_j -> si e_vi + sj e_vj
            if _root_neg(si, vi, -sj, vj):
                total += 1
    return total


def _root_neg(si, vi, sj, vj) -> bool:
    """Is si*e_vi - sj*e_vj a negative vector (type C root test helper)?"""
    if vi == vj:
        s = si - sj
        return s < 0
    if si == 1 and sj == -1:
        return False
    if si == -1 and sj == 1:
        return True
    if si == 1:  # both +: e_vi - e_vj negative iff vi > vj
        return vi > vj
    return vi < vj  # both -: -e_vi + e_vj negative iff vj > vi


def sgn_simple(n: int, i: int) -> tuple[int, ...]:
    """s_i swaps slots i, i+1 for i < n; s_n negates slot n."""
    w = list(range(1, n + 1))
    if i == n:
        w[n - 1] = -n
    else:
        w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def all_signed_perms(n: int):
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield tuple(s * v for s, v in zip(signs, perm))


# === chambers and the sign cocycle (type A) =================================

@dataclass(frozen=True)
class Chamber:
    """A chamber of S_n, i.e. C_0 moved by the finite permutation v."""

    v: tuple[int, ...]

    @classmethod
    def standard(cls, n: int) -> "Chamber":
        return cls(fin_identity(n))

    @property
    def n(self) -> int:
        return len(self.v)

    def letter_sign(self, letter: int) -> int:
        """Sign of s_letter here: + iff v^{-1}(root) is positive.

        The finite root image of s_j (j>=1) is e_j - e_{j+1}; of s_0 it is
        e_n - e_1.
        """
        vinv = fin_inverse(self.v)
        if letter == 0:
            return 1 if vinv[self.n - 1] < vinv[0] else -1
        return 1 if vinv[letter - 1] < vinv[letter] else -1

    def step(self, letter) -> "Chamber":
        """Update by the letter's finite image ("pi" allowed)."""
        if letter == "pi":
            img = tuple(range(2, self.n + 1)) + (1,)
        elif letter == 0:
            img = list(fin_identity(self.n))
            img[0], img[self.n - 1] = self.n, 1
            img = tuple(img)
        else:
            img = fin_simple(self.n, letter)
        return Chamber(fin_compose(self.v, img))


@dataclass(frozen=True)
class SignedWord:
    """Letters with braid-generator exponents, then a rotation tail."""

    pairs: tuple[tuple[int, int], ...]  # (letter, +-1)
    pi_power: int = 0

    def inverse(self) -> "SignedWord":
        # (prod U^eps · pi^k)^{-1} = pi^{-k} · prod reversed U^{-eps}; we keep
        # the tail at the end by conjugating each letter index with pi^k:
        # pi^{-k} s_j = s_{j+k mod n-things} pi^{-k} is *not* tracked here, so
        # inverses are only formed for tail-free words.
        assert self.pi_power == 0
        return SignedWord(tuple((l, -s) for l, s in reversed(self.pairs)), 0)

    def __mul__(self, other: "SignedWord") -> "SignedWord":
        assert self.pi_power == 0
        return SignedWord(self.pairs + other.pairs, other.pi_power)


def chamber_word(chamber: Chamber, letters, pi_power: int = 0
                 ) -> tuple[SignedWord, Chamber]:
    """Process a word left to right, collecting signs and moving the chamber.

    >>> sw, _ = chamber_word(Chamber.standard(2), [1, 0], 2)
    >>> sw.pairs, sw.pi_power
    (((1, 1), (0, 1)), 2)
    """
    pairs = []
    ch = chamber
    for letter in letters:
        pairs.append((letter, ch.letter_sign(letter)))
        ch = ch.step(letter)
    for _ in range(pi_power % ch.n if pi_power else 0):
        ch = ch.step("pi")
    return SignedWord(tuple(pairs), pi_power), ch


def chamber_y(chamber: Chamber, nu) -> SignedWord:
    """The chambered translation word U_C(tau_nu)."""
    letters, k = AffinePerm.translation(tuple(nu)).reduced_word()
    sw, _ = chamber_word(chamber, letters, k)
    return sw


def all_chambers(n: int):
    return [Chamber(v) for v in itertools.permutations(range(1, n + 1))]


# -- public names --------------------------------------------------------------

AffinePermutation = AffinePerm
TypeCPermutation = TypeCPerm


def length(w) -> int:
    """Coxeter length of an affine (type A or C) element."""
    if isinstance(w, TypeCPerm):
        return len(w.reduced_word())
    return w.length()


def reduced_word(w):
    """Reduced letters plus rotation remainder (remainder 0 in type C)."""
    if isinstance(w, TypeCPerm):
        return w.reduced_word(), 0
    return w.reduced_word()


def translation(nu, kind: str = "A"):
    """tau_nu as a window element; kind "A" (rank len(nu)) or "C" (doubled)."""
    if kind.upper() == "C":
        return TypeCPerm.translation(tuple(nu))
    return AffinePerm.translation(tuple(nu))


def chamber_sign(letter, chamber: Chamber) -> int:
    """+1 iff the finite image of the letter's root is positive on the chamber."""
    return chamber.letter_sign(letter)


def U_C_word(letters, chamber: Chamber, pi_power: int = 0) -> SignedWord:
    """The chambered signed word of an arbitrary (letters, rotation) pair."""
    sw, _ = chamber_word(chamber, letters, pi_power)
    return sw


if __name__ == "__main__":
    import doctest
    doctest.testmod()
