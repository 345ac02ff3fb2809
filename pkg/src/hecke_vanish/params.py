"""Exact arithmetic over the six-parameter coefficient field.

Every coefficient in this package lives in the field of rational functions
Q(q^(1/rq), t^(1/rt), a, b, c, d) for fixed "root orders" r = (rq, rt, 1, 1, 1, 1).
Internally each symbol s is represented by its root u_s = s^(1/r_s) and all
exponents are nonnegative integers in these root variables, so q^(3/2) at
rq = 4 is the internal exponent 6.  The root orders are chosen once per
algebra instance:

* type A in rank n uses rq = 4n, rt = 2, so that the shift
  (x_1...x_n)^(1/(2n)) and square roots of q stay representable;
* type C uses rq = 4, rt = 2, enough for q^(1/4) and sqrt(t).

`ParamPoly` is a sparse polynomial (dict from 6-tuples of internal exponents
to `Fraction`), `ParamRat` a reduced quotient of two of them with monic
denominator under graded lexicographic order, which makes equality structural.
`ParamMonomial` is the tiny value type +/- (p/q) * q^α t^β a^γ b^δ c^ε d^ζ with
rational actual powers; algebra instances carry their parameter values in this
form so that quadratic parameter changes (q -> q^2, a -> sqrt(t), ...) are just
exponent arithmetic.

>>> F = ParameterField.type_c()
>>> q, t = F.gen("q"), F.gen("t")
>>> (q * q - t * t) / (q - t) == q + t
True
>>> print((F.one() - q.inverse()).normal())
(q - 1) / (q)
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _int_gcd

from gmpy2 import gcd as _big_gcd, isqrt as _isqrt, mpz as _mpz

SYMBOLS = ("q", "t", "a", "b", "c", "d")
NSYM = len(SYMBOLS)
_ZERO6 = (0,) * NSYM


@dataclass(frozen=True)
class ParameterField:
    """Root orders for the six symbols; all exponent bookkeeping refers here."""

    root_orders: tuple[int, int, int, int, int, int]

    @classmethod
    def type_a(cls, n: int) -> "ParameterField":
        assert n >= 1
        return cls((4 * n, 2, 1, 1, 1, 1))

    @classmethod
    def type_c(cls) -> "ParameterField":
        return cls((4, 2, 1, 1, 1, 1))

    def zero(self) -> "ParamPoly":
        return ParamPoly(self, {})

    def one(self) -> "ParamRat":
        return ParamRat.from_poly(ParamPoly.const(self, Fraction(1)))

    def scalar(self, c) -> "ParamRat":
        return ParamRat.from_poly(ParamPoly.const(self, Fraction(c)))

    def gen(self, symbol: str, power=1) -> "ParamRat":
        """The symbol raised to a rational actual power, as a ParamRat."""
        return self.monomial(ParamMonomial.gen(symbol, power))

    def monomial(self, m: "ParamMonomial") -> "ParamRat":
        """Convert a signed parameter monomial into this field."""
        num_e, den_e = [], []
        for i, p in enumerate(m.powers):
            e = p * self.root_orders[i]
            assert e.denominator == 1, (
                f"power {p} of {SYMBOLS[i]} not representable at root order "
                f"{self.root_orders[i]}")
            e = int(e)
            num_e.append(max(e, 0))
            den_e.append(max(-e, 0))
        c = Fraction(m.coeff)
        num = ParamPoly(self, {tuple(num_e): Fraction(c.numerator, 1)})
        den = ParamPoly(self, {tuple(den_e): Fraction(c.denominator, 1)})
        return ParamRat(num, den)


@dataclass(frozen=True)
class ParamMonomial:
    """A signed monomial c * q^α t^β a^γ b^δ c^ε d^ζ with rational powers."""

    coeff: Fraction
    powers: tuple[Fraction, ...]

    def __post_init__(self):
        assert len(self.powers) == NSYM

    @classmethod
    def one(cls) -> "ParamMonomial":
        return cls(Fraction(1), (Fraction(0),) * NSYM)

    @classmethod
    def gen(cls, symbol: str, power=1) -> "ParamMonomial":
        i = SYMBOLS.index(symbol)
        pw = [Fraction(0)] * NSYM
        pw[i] = Fraction(power)
        return cls(Fraction(1), tuple(pw))

    @classmethod
    def make(cls, coeff=1, **powers) -> "ParamMonomial":
        pw = [Fraction(0)] * NSYM
        for s, p in powers.items():
            pw[SYMBOLS.index(s)] = Fraction(p)
        return cls(Fraction(coeff), tuple(pw))

    def __mul__(self, other: "ParamMonomial") -> "ParamMonomial":
        return ParamMonomial(
            self.coeff * other.coeff,
            tuple(p + r for p, r in zip(self.powers, other.powers)))

    def __pow__(self, e) -> "ParamMonomial":
        e = Fraction(e)
        if e.denominator == 1:
            c = self.coeff ** e.numerator
        else:
            assert self.coeff == 1, (
                f"cannot raise coefficient {self.coeff} to fractional power {e}")
            c = Fraction(1)
        return ParamMonomial(c, tuple(p * e for p in self.powers))

    def __neg__(self) -> "ParamMonomial":
        return ParamMonomial(-self.coeff, self.powers)

    def is_one(self) -> bool:
        return self.coeff == 1 and all(p == 0 for p in self.powers)

    def __str__(self) -> str:
        bits = [] if self.coeff == 1 and any(self.powers) else [str(self.coeff)]
        if self.coeff == -1 and any(self.powers):
            bits = ["-"]
        for s, p in zip(SYMBOLS, self.powers):
            if p == 0:
                continue
            if p == 1:
                bits.append(s)
            elif p.denominator == 1:
                bits.append(f"{s}^{p}")
            else:
                bits.append(f"{s}^({p})")
        ssep = "*".join(b for b in bits if b != "-") or "1"
        return ("-" + ssep) if bits and bits[0] == "-" else ssep


def _grlex_key(exps: tuple[int, ...]):
    return (sum(exps), exps)


class ParamPoly:
    """Sparse polynomial in the six root variables with Fraction coefficients."""

    __slots__ = ("field", "terms", "_hash")

    def __init__(self, field: ParameterField, terms: dict):
        self.field = field
        self.terms = {e: c for e, c in terms.items() if c}
        self._hash = None
        if __debug__:
            for e in self.terms:
                assert len(e) == NSYM and all(k >= 0 for k in e), e

    @classmethod
    def const(cls, field: ParameterField, c) -> "ParamPoly":
        c = Fraction(c)
        return cls(field, {_ZERO6: c} if c else {})

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and _ZERO6 in self.terms)

    def const_value(self) -> Fraction:
        assert self.is_const()
        return self.terms.get(_ZERO6, Fraction(0))

    def leading(self) -> tuple[tuple[int, ...], Fraction]:
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def __eq__(self, other) -> bool:
        return isinstance(other, ParamPoly) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __neg__(self) -> "ParamPoly":
        return ParamPoly(self.field, {e: -c for e, c in self.terms.items()})

    def __add__(self, other: "ParamPoly") -> "ParamPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return ParamPoly(self.field, out)

    def __sub__(self, other: "ParamPoly") -> "ParamPoly":
        return self + (-other)

    def __mul__(self, other: "ParamPoly") -> "ParamPoly":
        if not self.terms or not other.terms:
            return ParamPoly(self.field, {})
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2],
                     e1[3] + e2[3], e1[4] + e2[4], e1[5] + e2[5])
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return ParamPoly(self.field, out)

    def scale(self, c: Fraction) -> "ParamPoly":
        c = Fraction(c)
        if not c:
            return ParamPoly(self.field, {})
        return ParamPoly(self.field, {e: v * c for e, v in self.terms.items()})

    def shift(self, mono: tuple[int, ...]) -> "ParamPoly":
        """Multiply by the monomial with internal exponents `mono` (may dip <0)."""
        return ParamPoly(self.field, {
            tuple(a + b for a, b in zip(e, mono)): c
            for e, c in self.terms.items()})

    def __pow__(self, k: int) -> "ParamPoly":
        assert k >= 0
        out = ParamPoly.const(self.field, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def min_exps(self) -> tuple[int, ...]:
        mins = [min(e[i] for e in self.terms) for i in range(NSYM)]
        return tuple(mins)

    def __str__(self) -> str:
        return _render_poly(self)

    __repr__ = __str__


def _render_power(sym: str, internal: int, root: int) -> str:
    p = Fraction(internal, root)
    if p == 1:
        return sym
    if p.denominator == 1:
        return f"{sym}^{p.numerator}"
    return f"{sym}^({p.numerator}/{p.denominator})"


def _render_poly(p: ParamPoly) -> str:
    if not p.terms:
        return "0"
    roots = p.field.root_orders
    bits = []
    for e in sorted(p.terms, key=_grlex_key, reverse=True):
        c = p.terms[e]
        factors = [_render_power(SYMBOLS[i], e[i], roots[i])
                   for i in range(NSYM) if e[i]]
        body = "*".join(factors)
        if not factors:
            chunk = str(abs(c))
        elif abs(c) == 1:
            chunk = body
        else:
            chunk = f"{abs(c)}*{body}"
        bits.append(("- " if c < 0 else "+ ") + chunk)
    out = " ".join(bits)
    return out[2:] if out.startswith("+ ") else "-" + out[2:]


# --- polynomial gcd machinery (subresultant PRS) -------------------------

def _heap_key(e: tuple) -> tuple:
    return (-e[0] - e[1] - e[2] - e[3] - e[4] - e[5],
            -e[0], -e[1], -e[2], -e[3], -e[4], -e[5])


def divexact(f: ParamPoly, g: ParamPoly):
    """Exact division f/g, or None when g does not divide f."""
    if f.is_zero():
        return f
    if g.is_zero():
        return None
    if g.is_const():
        return f.scale(Fraction(1) / g.const_value())
    rem = dict(f.terms)
    out: dict = {}
    ge, gc = g.leading()
    gterms = list(g.terms.items())
    # lazy-deletion max-heap over graded lex keeps the leading-term scan
    # O(log n) instead of a full pass per reduction step
    heap = [_heap_key(e) + e for e in rem]
    heapq.heapify(heap)
    while heap:
        fe = heapq.heappop(heap)[7:]
        qc = rem.pop(fe, None)
        if qc is None:
            continue
        qe = (fe[0] - ge[0], fe[1] - ge[1], fe[2] - ge[2],
              fe[3] - ge[3], fe[4] - ge[4], fe[5] - ge[5])
        if qe[0] < 0 or qe[1] < 0 or qe[2] < 0 or qe[3] < 0 \
                or qe[4] < 0 or qe[5] < 0:
            return None
        qc = qc / gc
        out[qe] = qc
        for e2, c2 in gterms:
            if e2 == ge:
                continue
            e = (qe[0] + e2[0], qe[1] + e2[1], qe[2] + e2[2],
                 qe[3] + e2[3], qe[4] + e2[4], qe[5] + e2[5])
            old = rem.get(e)
            s = (old if old is not None else 0) - qc * c2
            if s:
                if old is None:
                    heapq.heappush(heap, _heap_key(e) + e)
                rem[e] = s
            else:
                rem.pop(e, None)
    return ParamPoly(f.field, out) if not rem else None


def _content_sign_normalize(p: ParamPoly) -> ParamPoly:
    """Primitive part with positive graded-lex leading coefficient."""
    if p.is_zero():
        return p
    num_gcd = 0
    den_lcm = 1
    for c in p.terms.values():
        num_gcd = _int_gcd(num_gcd, abs(c.numerator))
        den_lcm = den_lcm * c.denominator // _int_gcd(den_lcm, c.denominator)
    cont = Fraction(num_gcd, den_lcm)
    p = p.scale(Fraction(1) / cont)
    if p.leading()[1] < 0:
        p = -p
    return p


def _vars_present(p: ParamPoly) -> list[int]:
    out = []
    for i in range(NSYM):
        if any(e[i] for e in p.terms):
            out.append(i)
    return out


def _as_univariate(p: ParamPoly, v: int) -> dict[int, ParamPoly]:
    coeffs: dict[int, dict] = {}
    for e, c in p.terms.items():
        d = e[v]
        rest = tuple(0 if i == v else k for i, k in enumerate(e))
        coeffs.setdefault(d, {})[rest] = c
    return {d: ParamPoly(p.field, t) for d, t in coeffs.items()}


def _from_univariate(field: ParameterField, coeffs: dict[int, ParamPoly],
                     v: int) -> ParamPoly:
    terms: dict = {}
    for d, poly in coeffs.items():
        for e, c in poly.terms.items():
            ee = list(e)
            ee[v] += d
            terms[tuple(ee)] = c
    return ParamPoly(field, terms)


def _uni_mul(a: dict[int, ParamPoly], b: dict[int, ParamPoly]) -> dict:
    out: dict[int, ParamPoly] = {}
    for d1, c1 in a.items():
        for d2, c2 in b.items():
            p = c1 * c2
            d = d1 + d2
            out[d] = out[d] + p if d in out else p
    return {d: c for d, c in out.items() if not c.is_zero()}


def _uni_scale(a: dict[int, ParamPoly], s: ParamPoly) -> dict:
    out: dict[int, ParamPoly] = {}
    for d, c in a.items():
        p = c * s
        if not p.is_zero():
            out[d] = p
    return out


def _pseudo_rem(f: dict[int, ParamPoly], g: dict[int, ParamPoly]) -> dict:
    """prem(f, g): remainder of lc(g)^(deg f - deg g + 1) * f by g."""
    df, dg = max(f), max(g)
    lcg = g[dg]
    r = dict(f)
    steps = 0
    while r and max(r) >= dg:
        dr = max(r)
        lcr = r[dr]
        r = _uni_scale(r, lcg)
        steps += 1
        sub = _uni_scale({d + dr - dg: c for d, c in g.items()}, lcr)
        out: dict[int, ParamPoly] = dict(r)
        for d, c in sub.items():
            out[d] = out[d] - c if d in out else -c
        r = {d: c for d, c in out.items() if not c.is_zero()}
    # match prem exactly: pad missing lc(g) factors so subresultant divisions
    # later in the PRS stay exact
    for _ in range(df - dg + 1 - steps):
        r = _uni_scale(r, lcg)
    return r


def _uni_content(f: dict[int, ParamPoly]) -> ParamPoly:
    cont = None
    for c in f.values():
        cont = c if cont is None else poly_gcd(cont, c)
        if cont.is_const():
            break
    return cont


# --- heuristic gcd: integer evaluation + certified reconstruction --------
#
# Evaluate every variable at a large integer xi, take the plain integer gcd,
# and read a candidate divisor back off the balanced base-xi digits.  A
# candidate is only ever returned after exact trial division into both
# inputs, so a non-None answer is always a genuine common divisor of maximal
# degree; None sends the caller to the subresultant PRS fallback.  This is
# the classic gcdheu scheme and it turns the reduction hot path from
# pseudo-remainder sequences over 6 variables into a handful of big-int ops.

_HEU_BIT_CAP = 16_000_000
_ONE_TERM = {_ZERO6: 1}


def _int_pp(h: dict) -> dict:
    """Integer content removed, positive graded-lex leading coefficient."""
    cont = _mpz(0)
    for c in h.values():
        cont = _big_gcd(cont, c)
        if cont == 1:
            break
    if cont > 1:
        h = {e: c // cont for e, c in h.items()}
    if h[max(h, key=_grlex_key)] < 0:
        h = {e: -c for e, c in h.items()}
    return h


def _int_divexact(f: dict, g: dict):
    """Exact division of integer-coefficient term dicts, or None."""
    ge = max(g, key=_grlex_key)
    gc = g[ge]
    gterms = [(e, c) for e, c in g.items() if e != ge]
    rem = dict(f)
    out: dict = {}
    heap = [_heap_key(e) + e for e in rem]
    heapq.heapify(heap)
    while heap:
        fe = heapq.heappop(heap)[7:]
        c = rem.pop(fe, None)
        if c is None:
            continue
        q, r = divmod(c, gc)
        if r:
            return None
        qe = (fe[0] - ge[0], fe[1] - ge[1], fe[2] - ge[2],
              fe[3] - ge[3], fe[4] - ge[4], fe[5] - ge[5])
        if qe[0] < 0 or qe[1] < 0 or qe[2] < 0 or qe[3] < 0 \
                or qe[4] < 0 or qe[5] < 0:
            return None
        out[qe] = q
        for e2, c2 in gterms:
            e = (qe[0] + e2[0], qe[1] + e2[1], qe[2] + e2[2],
                 qe[3] + e2[3], qe[4] + e2[4], qe[5] + e2[5])
            old = rem.get(e)
            s = (old if old is not None else 0) - q * c2
            if s:
                if old is None:
                    heapq.heappush(heap, _heap_key(e) + e)
                rem[e] = s
            else:
                rem.pop(e, None)
    return out


def _heu_eval(terms: dict, v: int, xi: int) -> dict:
    """Substitute variable v := xi in an integer-coefficient term dict."""
    pows: dict[int, int] = {0: 1}
    out: dict = {}
    for e, c in terms.items():
        d = e[v]
        p = pows.get(d)
        if p is None:
            p = xi ** d
            pows[d] = p
        ev = e[:v] + (0,) + e[v + 1:]
        s = out.get(ev, 0) + c * p
        if s:
            out[ev] = s
        else:
            del out[ev]
    return out


def _heu_lift(gamma: dict, v: int, xi: int):
    """Balanced base-xi digit expansion of gamma along variable v."""
    out: dict = {}
    d = 0
    half = xi >> 1
    while gamma:
        nxt: dict = {}
        for e, c in gamma.items():
            r = c % xi
            if r > half:
                r -= xi
            if r:
                out[e[:v] + (d,) + e[v + 1:]] = r
            q = (c - r) // xi
            if q:
                nxt[e] = q
        gamma = nxt
        d += 1
        if d > 4096:
            return None
    return out


def _heu_gcd_int(f: dict, g: dict, vs: list[int]):
    if not vs:
        ((ef, cf),) = f.items()
        ((eg, cg),) = g.items()
        assert ef == eg == _ZERO6
        return {_ZERO6: _big_gcd(cf, cg)}
    # Pull the integer content out before evaluating: when the gcd does not
    # involve the variables below this level, its whole value rides on the
    # content, and the primitive-part step after lifting would erase it.
    cf = _mpz(0)
    for c in f.values():
        cf = _big_gcd(cf, c)
        if cf == 1:
            break
    cg = _mpz(0)
    for c in g.values():
        cg = _big_gcd(cg, c)
        if cg == 1:
            break
    if cf > 1:
        f = {e: c // cf for e, c in f.items()}
    if cg > 1:
        g = {e: c // cg for e, c in g.items()}
    cfg = _big_gcd(cf, cg)
    v = vs[-1]
    fn = max(abs(c) for c in f.values())
    gn = max(abs(c) for c in g.values())
    xi = 2 * min(fn, gn) + 29
    # The evaluated integers grow by a factor of roughly (deg + 1) in bit
    # length per remaining variable; prune doomed towers before doing any
    # big-integer work.
    tower = 1
    for w in vs:
        dw = max(max(e[w] for e in f), max(e[w] for e in g))
        tower *= dw + 1
        if xi.bit_length() * tower > _HEU_BIT_CAP:
            return None
    for _ in range(6):
        if xi.bit_length() * tower > _HEU_BIT_CAP:
            return None
        F = _heu_eval(f, v, xi)
        G = _heu_eval(g, v, xi)
        if F and G:
            h = _heu_gcd_int(F, G, vs[:-1])
            if h is not None:
                cand = _heu_lift(h, v, xi)
                if cand:
                    cand = _int_pp(cand)
                    if cand == _ONE_TERM:
                        return {_ZERO6: cfg} if cfg > 1 else cand
                    if (2 * max(abs(c) for c in cand.values()) + 2 <= xi
                            and _int_divexact(f, cand) is not None
                            and _int_divexact(g, cand) is not None):
                        if cfg > 1:
                            cand = {e: c * cfg for e, c in cand.items()}
                        return cand
        xi = 73794 * xi * _isqrt(_isqrt(xi)) // 27011
    return None


# When the evaluation tower is too tall for the heuristic, a modular image
# can still certify coprimality outright: reduce both inputs to univariate
# images over F_p (all other variables evaluated at fixed points).  Whenever
# the image of f -- or of g -- keeps its degree in v, so does the image of
# any divisor (leading coefficients multiply), hence a constant image gcd
# proves the true gcd has degree 0 in v.  Degree 0 in every shared variable
# makes the primitive gcd equal to 1.  A point set that damages the degrees
# is detected and discarded, so the certificate itself is exact.

_PROBE_P = (1 << 61) - 1
_PROBE_PTS = (
    (977955515934747, 351854639402417, 777777777777677,
     192837465564738221, 31415926535897931, 271828182845904523),
    (564738291019283747, 123456787907, 987654323333,
     81321345589144233, 19191919191919191, 424242424242424241),
)


def _probe_image(p: ParamPoly, v: int, pts) -> list | None:
    """Dense univariate image of p in variable v over F_(2^61-1)."""
    q = _PROBE_P
    degs = [max(e[i] for e in p.terms) for i in range(NSYM)]
    pows: list = [None] * NSYM
    for i in range(NSYM):
        if i != v and degs[i]:
            base = pts[i] % q
            tab = [1] * (degs[i] + 1)
            for k in range(1, degs[i] + 1):
                tab[k] = tab[k - 1] * base % q
            pows[i] = tab
    img = [0] * (degs[v] + 1)
    for e, c in p.terms.items():
        m = c.numerator % q
        if c.denominator != 1:
            dm = c.denominator % q
            if dm == 0:
                return None
            m = m * pow(dm, q - 2, q) % q
        for i in range(NSYM):
            if i != v and e[i]:
                m = m * pows[i][e[i]] % q
        img[e[v]] = (img[e[v]] + m) % q
    return img


def _uni_gcd_deg_mod(a: list, b: list) -> int:
    """Degree of gcd of dense coefficient lists over F_(2^61-1)."""
    q = _PROBE_P

    def trim(x):
        while x and x[-1] == 0:
            x.pop()
        return x

    a, b = trim(list(a)), trim(list(b))
    while b:
        inv = pow(b[-1], q - 2, q)
        db = len(b) - 1
        while a and len(a) - 1 >= db:
            shift = len(a) - 1 - db
            s = a[-1] * inv % q
            for i in range(db + 1):
                a[shift + i] = (a[shift + i] - s * b[i]) % q
            trim(a)
        a, b = b, a
    return len(a) - 1


def _gcd_trivial_certificate(f: ParamPoly, g: ParamPoly,
                             common: list[int]) -> bool:
    """True certifies that gcd(f, g) is constant."""
    for pts in _PROBE_PTS:
        ok = True
        for v in common:
            fi = _probe_image(f, v, pts)
            gi = _probe_image(g, v, pts)
            if fi is None or gi is None:
                return False
            if fi[-1] == 0 and gi[-1] == 0:
                ok = False  # this point set damaged both degrees
                break
            if not any(fi) or not any(gi) \
                    or _uni_gcd_deg_mod(fi, gi) != 0:
                return False
        if ok:
            return True
    return False


def _heu_gcd(f: ParamPoly, g: ParamPoly):
    """Certified-heuristic gcd of primitive inputs, or None to fall back."""
    ft = {}
    for e, c in f.terms.items():
        if c.denominator != 1:
            return None
        ft[e] = _mpz(c.numerator)
    gt = {}
    for e, c in g.terms.items():
        if c.denominator != 1:
            return None
        gt[e] = _mpz(c.numerator)
    vs = sorted(
        set(_vars_present(f)) | set(_vars_present(g)),
        key=lambda v: (max(e[v] for e in ft) + max(e[v] for e in gt)))
    h = _heu_gcd_int(ft, gt, vs)
    if h is None:
        return None
    return _content_sign_normalize(
        ParamPoly(f.field, {e: Fraction(int(c)) for e, c in h.items()}))


def poly_gcd(f: ParamPoly, g: ParamPoly) -> ParamPoly:
    """Primitive gcd with positive leading coefficient (scalars -> 1)."""
    one = ParamPoly.const(f.field, 1)
    if f.is_zero():
        return _content_sign_normalize(g) if not g.is_zero() else one
    if g.is_zero():
        return _content_sign_normalize(f)
    if f.is_const() or g.is_const():
        return one
    if f.terms == g.terms:
        return _content_sign_normalize(f)
    if len(f.terms) == 1 or len(g.terms) == 1:
        mf, mg = f.min_exps(), g.min_exps()
        e = tuple(min(x, y) for x, y in zip(mf, mg))
        return ParamPoly(f.field, {e: Fraction(1)})
    # exponent-lattice compression: root-unit bookkeeping stores q^(1/r) as
    # integer multiples of r, so plain-integer-power inputs carry exponents
    # with a large common divisor per variable; gcd commutes with x -> x^k
    ks = [0] * NSYM
    for e in f.terms:
        for i in range(NSYM):
            ks[i] = _int_gcd(ks[i], e[i])
    if any(k != 1 for k in ks):
        for e in g.terms:
            for i in range(NSYM):
                ks[i] = _int_gcd(ks[i], e[i])
    ks = [k if k > 1 else 1 for k in ks]
    if any(k > 1 for k in ks):
        fc = ParamPoly(f.field, {
            tuple(x // k for x, k in zip(e, ks)): c
            for e, c in f.terms.items()})
        gc = ParamPoly(g.field, {
            tuple(x // k for x, k in zip(e, ks)): c
            for e, c in g.terms.items()})
        h = poly_gcd(fc, gc)
        return ParamPoly(f.field, {
            tuple(x * k for x, k in zip(e, ks)): c
            for e, c in h.terms.items()})
    # cheap divisibility probes (very common here: denominators are built as
    # products of factors that reappear verbatim in numerators)
    if len(g.terms) <= len(f.terms) and divexact(f, g) is not None:
        return _content_sign_normalize(g)
    if len(f.terms) <= len(g.terms) and divexact(g, f) is not None:
        return _content_sign_normalize(f)
    vf, vg = _vars_present(f), _vars_present(g)
    common = [v for v in vf if v in vg]
    if not common:
        return one
    fp = _content_sign_normalize(f)
    gp = _content_sign_normalize(g)
    h = _heu_gcd(fp, gp)
    if h is not None:
        return h
    if _gcd_trivial_certificate(fp, gp, common):
        return one
    # main variable: smallest combined degree keeps the PRS short
    def maxdeg(p, v):
        return max(e[v] for e in p.terms)
    v = min(common, key=lambda w: maxdeg(f, w) + maxdeg(g, w))
    F, G = _as_univariate(f, v), _as_univariate(g, v)
    cf, cg = _uni_content(F), _uni_content(G)
    cont = poly_gcd(cf, cg)
    F = {d: divexact(c, cf) for d, c in F.items()}
    G = {d: divexact(c, cg) for d, c in G.items()}
    if max(F) < max(G):
        F, G = G, F
    # subresultant polynomial remainder sequence
    h = one
    gg = one
    while True:
        delta = max(F) - max(G)
        R = _pseudo_rem(F, G)
        if not R:
            pp = G
            break
        if max(R) == 0:
            pp = None
            break
        divisor = gg * (h ** delta)
        F, G = G, {d: divexact(c, divisor) for d, c in R.items()}
        gg = F[max(F)]
        if delta == 0:
            h = h  # unchanged
        elif delta == 1:
            h = gg
        else:
            h = divexact(gg ** delta, h ** (delta - 1))
    if pp is None:
        return _content_sign_normalize(cont) if not cont.is_const() else one
    c = _uni_content(pp)
    pp = {d: divexact(x, c) for d, x in pp.items()}
    out = _from_univariate(f.field, pp, v) * cont
    return _content_sign_normalize(out)


class ParamRat:
    """Reduced quotient of two ParamPolys, denominator monic under graded lex."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: ParamPoly, den: ParamPoly, *, reduced=False):
        assert not den.is_zero(), "zero denominator"
        if not reduced:
            num, den = _reduce(num, den)
        else:
            num, den = _normalize_cheap(num, den)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def from_poly(cls, p: ParamPoly) -> "ParamRat":
        return cls(p, ParamPoly.const(p.field, 1), reduced=True)

    @property
    def field(self) -> ParameterField:
        return self.num.field

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_const() and self.den.is_const() and \
            self.num.const_value() == self.den.const_value() == 1

    def is_scalar(self) -> bool:
        return self.num.is_const() and self.den.is_const()

    def scalar_value(self) -> Fraction:
        assert self.is_scalar()
        return self.num.const_value() / self.den.const_value() \
            if not self.num.is_zero() else Fraction(0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ParamRat):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __add__(self, other: "ParamRat") -> "ParamRat":
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == other.den:
            s = self.num + other.num
            if s.is_zero():
                return ParamRat.from_poly(s)
            g = poly_gcd(s, self.den)
            if g.is_const():
                return ParamRat(s, self.den, reduced=True)
            return ParamRat(divexact(s, g), divexact(self.den, g),
                            reduced=True)
        # Henrici addition: with g = gcd(d1, d2), d1 = g*a, d2 = g*b, the sum
        # is (n1*b + n2*a) / (g*a*b); the numerator is coprime to a and to b,
        # so only the part shared with g can cancel.  Every gcd below has a
        # small structured operand, which keeps reduction cheap even when the
        # numerators are huge.
        g = poly_gcd(self.den, other.den)
        if g.is_const():
            t = self.num * other.den + other.num * self.den
            if t.is_zero():
                return ParamRat.from_poly(t)
            return ParamRat(t, self.den * other.den, reduced=True)
        a = divexact(self.den, g)
        b = divexact(other.den, g)
        t = self.num * b + other.num * a
        if t.is_zero():
            return ParamRat.from_poly(t)
        c = poly_gcd(t, g)
        if not c.is_const():
            t = divexact(t, c)
            g = divexact(g, c)
        return ParamRat(t, g * a * b, reduced=True)

    def __sub__(self, other: "ParamRat") -> "ParamRat":
        return self + (-other)

    def __neg__(self) -> "ParamRat":
        return ParamRat(-self.num, self.den, reduced=True)

    def __mul__(self, other: "ParamRat") -> "ParamRat":
        if self.num.is_zero() or other.num.is_zero():
            return ParamRat(ParamPoly(self.field, {}),
                            ParamPoly.const(self.field, 1), reduced=True)
        # cross-cancellation: both inputs are reduced, so after cancelling
        # num against the opposite den the product is reduced as well
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        g1 = poly_gcd(n1, d2)
        if not g1.is_const():
            n1 = divexact(n1, g1)
            d2 = divexact(d2, g1)
        g2 = poly_gcd(n2, d1)
        if not g2.is_const():
            n2 = divexact(n2, g2)
            d1 = divexact(d1, g2)
        return ParamRat(n1 * n2, d1 * d2, reduced=True)

    def __truediv__(self, other: "ParamRat") -> "ParamRat":
        return self * other.inverse()

    def inverse(self) -> "ParamRat":
        assert not self.num.is_zero(), "division by zero"
        return ParamRat(self.den, self.num, reduced=True)

    def __pow__(self, k: int) -> "ParamRat":
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def scale(self, c) -> "ParamRat":
        return ParamRat(self.num.scale(Fraction(c)), self.den, reduced=True) \
            if Fraction(c) else ParamRat.from_poly(ParamPoly(self.field, {}))

    def normal(self) -> str:
        return f"({_render_poly(self.num)}) / ({_render_poly(self.den)})"

    def __str__(self) -> str:
        if self.den.is_const() and self.den.const_value() == 1:
            return _render_poly(self.num)
        return self.normal()

    __repr__ = __str__


def _normalize_cheap(num: ParamPoly,
                     den: ParamPoly) -> tuple[ParamPoly, ParamPoly]:
    """Canonical form without a gcd: net-monomial split, monic denominator."""
    field = num.field
    one = ParamPoly.const(field, 1)
    if num.is_zero():
        return num, one
    # split off the net monomial so both sides have min exponent 0 per variable
    mn, md = num.min_exps(), den.min_exps()
    if any(mn) or any(md):
        net = tuple(a - b for a, b in zip(mn, md))
        num = num.shift(tuple(-k for k in mn))
        den = den.shift(tuple(-k for k in md))
        num = num.shift(tuple(max(k, 0) for k in net))
        den = den.shift(tuple(max(-k, 0) for k in net))
    if den.is_const():
        c = den.const_value()
        return (num, den) if c == 1 else (num.scale(Fraction(1) / c), one)
    lc = den.leading()[1]
    if lc != 1:
        num = num.scale(Fraction(1) / lc)
        den = den.scale(Fraction(1) / lc)
    return num, den


def _reduce(num: ParamPoly, den: ParamPoly) -> tuple[ParamPoly, ParamPoly]:
    num, den = _normalize_cheap(num, den)
    if num.is_zero() or den.is_const():
        return num, den
    if num.terms == den.terms:
        one = ParamPoly.const(num.field, 1)
        return one, one
    g = poly_gcd(num, den)
    if not g.is_const():
        num = divexact(num, g)
        den = divexact(den, g)
        lc = den.leading()[1]
        if lc != 1:
            num = num.scale(Fraction(1) / lc)
            den = den.scale(Fraction(1) / lc)
        if den.is_const():
            den = ParamPoly.const(num.field, 1)
    return num, den


# --- substitution and field conversion ------------------------------------

def param_substitute(expr, mapping: dict[str, ParamMonomial],
                     target: ParameterField):
    """Substitute base symbols by signed monomials; returns ParamRat.

    `mapping` sends symbol names to ParamMonomial images (missing symbols map
    to themselves).  Works on ParamPoly and ParamRat.
    """
    if isinstance(expr, ParamRat):
        num = param_substitute(expr.num, mapping, target)
        den = param_substitute(expr.den, mapping, target)
        return num / den
    assert isinstance(expr, ParamPoly)
    images = [mapping.get(s, ParamMonomial.gen(s)) for s in SYMBOLS]
    roots = expr.field.root_orders
    out = target.scalar(0)
    for e, c in expr.terms.items():
        m = ParamMonomial(Fraction(c), (Fraction(0),) * NSYM)
        for i in range(NSYM):
            if e[i]:
                m = m * (images[i] ** Fraction(e[i], roots[i]))
        out = out + target.monomial(m)
    return out


def convert_field(expr, target: ParameterField):
    """Re-express a ParamPoly/ParamRat in a field with different root orders."""
    if isinstance(expr, ParamRat):
        if expr.field.root_orders == target.root_orders:
            return expr
        num = convert_field(expr.num, target)
        den = convert_field(expr.den, target)
        return ParamRat(num, den)
    assert isinstance(expr, ParamPoly)
    if expr.field.root_orders == target.root_orders:
        return expr
    old, new = expr.field.root_orders, target.root_orders
    terms = {}
    for e, c in expr.terms.items():
        ee = []
        for i in range(NSYM):
            v = Fraction(e[i] * new[i], old[i])
            assert v.denominator == 1, (
                f"exponent {Fraction(e[i], old[i])} of {SYMBOLS[i]} does not "
                f"fit root order {new[i]}")
            ee.append(int(v))
        terms[tuple(ee)] = c
    return ParamPoly(target, terms)


def rat_sum(parts) -> ParamRat:
    """Sum with lazily batched reduction (for dot products in linear solves)."""
    parts = list(parts)
    if not parts:
        raise ValueError("empty sum needs a field")
    total = parts[0]
    for p in parts[1:]:
        total = total + p
    return total


if __name__ == "__main__":
    import doctest
    doctest.testmod()
