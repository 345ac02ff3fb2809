"""Polynomial representations of the affine Hecke algebras of types A and C.

Type A (rank n, parameters q, t) acts on Laurent polynomials in x_1..x_n:

    T_i f = t f + (x_{i+1} - t x_i)/(x_{i+1} - x_i) (f^{s_i} - f),  0 < i < n
    T_0 f = t f + (x_1 - t q x_n)/(x_1 - q x_n) (f^{s_0} - f)
    (pi f)(x_1,...,x_n) = f(q x_n, x_1, ..., x_{n-1})

with f^{s_0} = f(q x_n, x_2, ..., x_{n-1}, x_1/q), Tbar_i = T_i + 1 - t and

    Y_i = T_i ... T_{n-1} pi Tbar_1 ... Tbar_{i-1}.

Type C (rank n, parameters q, t, a, b, c, d) acts on Laurent polynomials with
integer exponents; the interior T_i are as in type A and the two ends are

    T_n f = -ab f + (1 - a x_n)(1 - b x_n)/(1 - x_n^2) (f^{s_n} - f)
    T_0 f = -(cd/q) f + (1 - c/x_1)(1 - d/x_1)/(1 - q/x_1^2) (f^{s_0} - f)

with f^{s_n} = f(..., 1/x_n), f^{s_0} = f(q/x_1, ...).  Here Tbar_n = T_n +
1 + ab and Tbar_0 = T_0 + 1 + cd/q, so Tbar_n T_n = -ab, Tbar_0 T_0 = -cd/q,
and

    Y_i = T_i ... T_n T_{n-1} ... T_1 T_0 Tbar_1 ... Tbar_{i-1}.

Every divided difference is expanded term by term through the exact
geometric-sum identity (u^m - v^m)/(u - v) = sum_j u^j v^(m-1-j), so no
polynomial division ever happens and all operators are exact on Laurent
monomials with exponents in a fixed fractional coset.

A word written s_{i_1} s_{i_2} ... s_{i_k} acts as T_{i_1}(T_{i_2}(...(f))):
the leftmost letter is the outermost operator, so words are applied reversed.

The intertwiner sigma (type C) maps f to f(sqrt(q)/x_n, ..., sqrt(q)/x_1)
with parameters permuted (a,b,c,d) -> (c/sqrt(q), d/sqrt(q), a sqrt(q),
b sqrt(q)); it returns the image together with the parameter-swapped target
instance, as does Y_omega = (T_n...T_1)(T_n...T_2)...(T_n) sigma (sigma acts
first).  The rank-n C braid presentation embeds into the 2n-strand A
presentation by c_0 -> T_0, c_n -> T_n, c_j -> T_j T_{2n-j}; braid lifts of
translations map as Y_i -> Y_i Y_{2n+1-i}^(-1) and the end letters fold
through x_i -> z_i, x_{n+i} -> 1/z_{n+1-i} at the parameter specialization
(a,b,c,d) = (sqrt(t), -sqrt(t), sqrt(qt), -sqrt(qt)); see
verify_embedding_C_in_A for exactly which identities hold where.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .laurent import LaurentPoly, norm_exps
from .params import ParamMonomial, ParamRat, ParameterField
from .weyl import Chamber, SignedWord, chamber_y


# === instances ================================================================

@dataclass(frozen=True)
class HeckeInstanceA:
    """Type A rank-n representation data: the (q, t) values as monomials."""

    n: int
    field: ParameterField
    qv: ParamMonomial
    tv: ParamMonomial

    def __post_init__(self):
        # Rank 1 is legal but degenerate: no T letters, Y_1 = pi.
        assert self.n >= 1

    @classmethod
    def generic(cls, n: int, field: ParameterField | None = None
                ) -> "HeckeInstanceA":
        field = field or ParameterField.type_a(n)
        return cls(n, field, ParamMonomial.gen("q"), ParamMonomial.gen("t"))

    @property
    def q(self) -> ParamRat:
        return self.field.monomial(self.qv)

    @property
    def t(self) -> ParamRat:
        return self.field.monomial(self.tv)


@dataclass(frozen=True)
class HeckeInstanceC:
    """Type C rank-n representation data: values of q, t, a, b, c, d."""

    n: int
    field: ParameterField
    qv: ParamMonomial
    tv: ParamMonomial
    av: ParamMonomial
    bv: ParamMonomial
    cv: ParamMonomial
    dv: ParamMonomial

    def __post_init__(self):
        assert self.n >= 1

    @classmethod
    def generic(cls, n: int, field: ParameterField | None = None
                ) -> "HeckeInstanceC":
        field = field or ParameterField.type_c()
        g = ParamMonomial.gen
        return cls(n, field, g("q"), g("t"), g("a"), g("b"), g("c"), g("d"))

    @property
    def q(self) -> ParamRat:
        return self.field.monomial(self.qv)

    @property
    def t(self) -> ParamRat:
        return self.field.monomial(self.tv)

    @property
    def a(self) -> ParamRat:
        return self.field.monomial(self.av)

    @property
    def b(self) -> ParamRat:
        return self.field.monomial(self.bv)

    @property
    def c(self) -> ParamRat:
        return self.field.monomial(self.cv)

    @property
    def d(self) -> ParamRat:
        return self.field.monomial(self.dv)


def _acc(d: dict, e, c: ParamRat) -> None:
    e = norm_exps(e)
    s = d.get(e)
    s = c if s is None else s + c
    if s.is_zero():
        d.pop(e, None)
    else:
        d[e] = s


def _int(m) -> int:
    m = Fraction(m)
    assert m.denominator == 1, "exponents must lie in one coset per slot pair"
    return int(m)


# === type A operators =========================================================

def apply_Ti_A(inst, i: int, f: LaurentPoly) -> LaurentPoly:
    """T_i for 0 < i < n (shared verbatim by the type C interior).

    Per term c*x^e with p = e_i, r = e_{i+1} the divided difference
    (f^{s_i} - f)/(x_{i+1} - x_i) contributes the geometric sum

        sign * c * sum_{j<|p-r|} x_i^(a0+j) x_{i+1}^(b0-j)

    with (sign, a0, b0) = (+1, r, p-1) when p > r and (-1, p, r-1) when
    p < r; the result is t f + (x_{i+1} - t x_i) * (that sum).
    """
    assert 1 <= i <= inst.n - 1
    ai, bi = i - 1, i
    t = inst.t
    out: dict = {}
    for e, coeff in f.terms.items():
        _acc(out, e, coeff * t)
    for e, coeff in f.terms.items():
        p, r = e[ai], e[bi]
        if p == r:
            continue
        m = _int(p - r)
        if m > 0:
            cnt, a0, b0, cc = m, r, p - 1, coeff
        else:
            cnt, a0, b0, cc = -m, p, r - 1, -coeff
        neg_t = -(cc * t)
        ee = list(e)
        for j in range(cnt):
            ee[ai], ee[bi] = a0 + j, b0 - j
            ee[bi] += 1
            _acc(out, tuple(ee), cc)          # x_{i+1} * monomial
            ee[bi] -= 1
            ee[ai] += 1
            _acc(out, tuple(ee), neg_t)       # -t x_i * monomial
            ee[ai] -= 1
    return LaurentPoly(f.field, f.nvars, out)


def apply_T0_A(inst: HeckeInstanceA, f: LaurentPoly) -> LaurentPoly:
    """The affine generator T_0 = t + (x_1 - tq x_n)/(x_1 - q x_n)(s_0 - 1)."""
    n = inst.n
    assert n >= 2
    t, q = inst.t, inst.field.monomial(inst.qv)
    out: dict = {}
    for e, coeff in f.terms.items():
        _acc(out, e, coeff * t)
    for e, coeff in f.terms.items():
        p, r = e[0], e[n - 1]
        if p == r:
            continue
        m = _int(p - r)
        delta = []  # (exp_1, exp_n, ParamRat coefficient) of the difference
        if m > 0:
            # -c * sum_j q^(m-1-j) x_1^(r+j) x_n^(p-1-j)
            for j in range(m):
                qpow = inst.field.monomial(inst.qv ** (m - 1 - j))
                delta.append((r + j, p - 1 - j, -(coeff * qpow)))
        else:
            # +c * sum_j q^(-1-j) x_1^(p+j) x_n^(r-1-j)
            for j in range(-m):
                qpow = inst.field.monomial(inst.qv ** (-1 - j))
                delta.append((p + j, r - 1 - j, coeff * qpow))
        ee = list(e)
        for e1, en, cc in delta:
            ee[0], ee[n - 1] = e1 + 1, en
            _acc(out, tuple(ee), cc)          # x_1 * term
            ee[0], ee[n - 1] = e1, en + 1
            _acc(out, tuple(ee), -(cc * t * q))  # -tq x_n * term
        ee[0], ee[n - 1] = e[0], e[n - 1]
    return LaurentPoly(f.field, f.nvars, out)


def apply_pi(inst: HeckeInstanceA, f: LaurentPoly, k: int = 1) -> LaurentPoly:
    """pi^k; pi sends c*x^e to c q^(e_1) x^(e_2,...,e_n,e_1)."""
    n = inst.n
    g = f
    step = 1 if k >= 0 else -1
    for _ in range(abs(k)):
        out: dict = {}
        for e, coeff in g.terms.items():
            if step == 1:
                new_e = e[1:] + (e[0],)
                qpow = inst.qv ** Fraction(e[0])
            else:
                new_e = (e[n - 1],) + e[:n - 1]
                qpow = inst.qv ** (-Fraction(e[n - 1]))
            _acc(out, new_e, coeff * inst.field.monomial(qpow))
        g = LaurentPoly(f.field, n, out)
    return g


def _tbar_a(inst, i: int, f: LaurentPoly) -> LaurentPoly:
    g = apply_Ti_A(inst, i, f) if i != 0 else apply_T0_A(inst, f)
    one_minus_t = inst.field.one() - inst.t
    return g + f.scale(one_minus_t)


def _apply_token_a(inst: HeckeInstanceA, tok, f: LaurentPoly) -> LaurentPoly:
    kind = tok[0]
    if kind == "pi":
        return apply_pi(inst, f, tok[1])
    _, i, s = tok
    if kind == "T":
        if s > 0:
            return apply_Ti_A(inst, i, f) if i != 0 else apply_T0_A(inst, f)
        return _tbar_a(inst, i, f).scale(inst.t.inverse())
    if kind == "Tb":
        if s > 0:
            return _tbar_a(inst, i, f)
        g = apply_Ti_A(inst, i, f) if i != 0 else apply_T0_A(inst, f)
        return g.scale(inst.t.inverse())
    raise ValueError(tok)


def apply_word_a(inst: HeckeInstanceA, tokens, f: LaurentPoly) -> LaurentPoly:
    """Apply a token word with the leftmost token outermost."""
    for tok in reversed(tokens):
        f = _apply_token_a(inst, tok, f)
    return f


def y_word_a(inst: HeckeInstanceA, i: int, exp: int = 1):
    """Tokens of Y_i = T_i ... T_{n-1} pi Tbar_1 ... Tbar_{i-1} (or inverse)."""
    assert 1 <= i <= inst.n
    word = [("T", j, 1) for j in range(i, inst.n)] + [("pi", 1)] + \
           [("Tb", j, 1) for j in range(1, i)]
    if exp == 1:
        return word
    inv = []
    for tok in reversed(word):
        if tok[0] == "pi":
            inv.append(("pi", -tok[1]))
        else:
            inv.append((tok[0], tok[1], -tok[2]))
    return inv


def apply_Yi_A(inst: HeckeInstanceA, i: int, f: LaurentPoly,
               exp: int = 1) -> LaurentPoly:
    return apply_word_a(inst, y_word_a(inst, i, exp), f)


def apply_signed_word(inst: HeckeInstanceA, sw: SignedWord,
                      f: LaurentPoly) -> LaurentPoly:
    """Evaluate U(s_{i_1})^(+-1) ... U(s_{i_k})^(+-1) pi^k (tail first)."""
    g = apply_pi(inst, f, sw.pi_power) if sw.pi_power else f
    for letter, sign in reversed(sw.pairs):
        g = _apply_token_a(inst, ("T", letter, sign), g)
    return g


def apply_YC(inst: HeckeInstanceA, nu, chamber: Chamber,
             f: LaurentPoly) -> LaurentPoly:
    """The chambered translation operator Y^C_nu = U_C(tau_nu)."""
    return apply_signed_word(inst, chamber_y(chamber, tuple(nu)), f)


# === type C operators =========================================================

def apply_Ti_C(inst: HeckeInstanceC, i: int, f: LaurentPoly) -> LaurentPoly:
    return apply_Ti_A(inst, i, f)


def apply_Tn_C(inst: HeckeInstanceC, f: LaurentPoly) -> LaurentPoly:
    """T_n = -ab + (1 - a x_n)(1 - b x_n)/(1 - x_n^2)(s_n - 1)."""
    n = inst.n
    slot = n - 1
    a, b = inst.a, inst.b
    ab = a * b
    sum_ab, neg_ab = a + b, -ab
    out: dict = {}
    for e, coeff in f.terms.items():
        _acc(out, e, coeff * neg_ab)
    for e, coeff in f.terms.items():
        p = _int(e[slot])
        if p == 0:
            continue
        cc = coeff if p > 0 else -coeff
        ee = list(e)
        for j in range(abs(p)):
            base = -abs(p) + 2 * j
            # multiply by (1 - (a+b) x_n + ab x_n^2)
            ee[slot] = base
            _acc(out, tuple(ee), cc)
            ee[slot] = base + 1
            _acc(out, tuple(ee), -(cc * sum_ab))
            ee[slot] = base + 2
            _acc(out, tuple(ee), cc * ab)
        ee[slot] = e[slot]
    return LaurentPoly(f.field, f.nvars, out)


def apply_T0_C(inst: HeckeInstanceC, f: LaurentPoly) -> LaurentPoly:
    """T_0 = -cd/q + (1 - c/x_1)(1 - d/x_1)/(1 - q/x_1^2)(s_0 - 1)."""
    c, d, q = inst.c, inst.d, inst.q
    cd = c * d
    sum_cd = c + d
    neg_cdq = -(cd / q)
    out: dict = {}
    for e, coeff in f.terms.items():
        _acc(out, e, coeff * neg_cdq)
    for e, coeff in f.terms.items():
        p = _int(e[0])
        if p == 0:
            continue
        delta = []  # (exponent, ParamRat) of (f^{s_0}-f)/(1 - q/x_1^2)
        if p > 0:
            for j in range(p):
                delta.append((p - 2 * j,
                              -(coeff * inst.field.monomial(inst.qv ** j))))
        else:
            for j in range(-p):
                delta.append((-p - 2 * j,
                              coeff * inst.field.monomial(inst.qv ** (j + p))))
        ee = list(e)
        for base, cc in delta:
            # multiply by (1 - (c+d)/x_1 + cd/x_1^2)
            ee[0] = base
            _acc(out, tuple(ee), cc)
            ee[0] = base - 1
            _acc(out, tuple(ee), -(cc * sum_cd))
            ee[0] = base - 2
            _acc(out, tuple(ee), cc * cd)
        ee[0] = e[0]
    return LaurentPoly(f.field, f.nvars, out)


def _t_c(inst: HeckeInstanceC, i: int, f: LaurentPoly) -> LaurentPoly:
    if i == 0:
        return apply_T0_C(inst, f)
    if i == inst.n:
        return apply_Tn_C(inst, f)
    return apply_Ti_A(inst, i, f)


def _tbar_c(inst: HeckeInstanceC, i: int, f: LaurentPoly) -> LaurentPoly:
    g = _t_c(inst, i, f)
    if i == 0:
        shift = inst.field.one() + inst.c * inst.d / inst.q
    elif i == inst.n:
        shift = inst.field.one() + inst.a * inst.b
    else:
        shift = inst.field.one() - inst.t
    return g + f.scale(shift)


def _quad_scalar_c(inst: HeckeInstanceC, i: int) -> ParamRat:
    """Tbar_i T_i equals this scalar: t interior, -ab at n, -cd/q at 0."""
    if i == 0:
        return -(inst.c * inst.d / inst.q)
    if i == inst.n:
        return -(inst.a * inst.b)
    return inst.t


def _apply_token_c(inst: HeckeInstanceC, tok, f: LaurentPoly) -> LaurentPoly:
    kind, i, s = tok
    if kind == "T":
        if s > 0:
            return _t_c(inst, i, f)
        return _tbar_c(inst, i, f).scale(_quad_scalar_c(inst, i).inverse())
    if kind == "Tb":
        if s > 0:
            return _tbar_c(inst, i, f)
        return _t_c(inst, i, f).scale(_quad_scalar_c(inst, i).inverse())
    raise ValueError(tok)


def apply_word_c(inst: HeckeInstanceC, tokens, f: LaurentPoly) -> LaurentPoly:
    for tok in reversed(tokens):
        f = _apply_token_c(inst, tok, f)
    return f


def y_word_c(inst: HeckeInstanceC, i: int, exp: int = 1):
    """Tokens of Y_i = T_i ... T_n T_{n-1} ... T_1 T_0 Tbar_1 ... Tbar_{i-1}."""
    n = inst.n
    assert 1 <= i <= n
    word = [("T", j, 1) for j in range(i, n + 1)] + \
           [("T", j, 1) for j in range(n - 1, 0, -1)] + [("T", 0, 1)] + \
           [("Tb", j, 1) for j in range(1, i)]
    if exp == 1:
        return word
    return [(k, j, -s) for k, j, s in reversed(word)]


def apply_Yi_C(inst: HeckeInstanceC, i: int, f: LaurentPoly,
               exp: int = 1) -> LaurentPoly:
    return apply_word_c(inst, y_word_c(inst, i, exp), f)


# === the intertwiners sigma and Y_omega ======================================

def sigma_target(inst: HeckeInstanceC) -> HeckeInstanceC:
    rq = inst.qv ** Fraction(1, 2)
    rq_inv = inst.qv ** Fraction(-1, 2)
    return HeckeInstanceC(inst.n, inst.field, inst.qv, inst.tv,
                          inst.cv * rq_inv, inst.dv * rq_inv,
                          inst.av * rq, inst.bv * rq)


def apply_sigma(inst: HeckeInstanceC, f: LaurentPoly
                ) -> tuple[LaurentPoly, HeckeInstanceC]:
    """f -> f(sqrt(q)/x_n, ..., sqrt(q)/x_1), a coefficient-field-linear map.

    Returns the image and the target instance with the permuted values
    (c/sqrt(q), d/sqrt(q), a sqrt(q), b sqrt(q)): the variable reversal alone
    conjugates T_n at (a, b) into T_0 at (a sqrt(q), b sqrt(q)) and T_0 at
    (c, d) into T_n at (c/sqrt(q), d/sqrt(q)), so the parameter permutation
    lives entirely in the instance tag and sigma . sigma = identity.
    """
    n = inst.n
    rq = inst.qv ** Fraction(1, 2)
    out: dict = {}
    for e, coeff in f.terms.items():
        tot = sum(Fraction(x) for x in e)
        new_e = tuple(-Fraction(e[n - 1 - j]) for j in range(n))
        _acc(out, new_e, coeff * inst.field.monomial(rq ** tot))
    g = LaurentPoly(f.field, n, out)
    return g, sigma_target(inst)


def yomega_blocks(n: int):
    """Tokens of the positive part (T_n...T_1)(T_n...T_2)...(T_n)."""
    toks = []
    for i in range(1, n + 1):
        toks += [("T", j, 1) for j in range(n, i - 1, -1)]
    return toks


def apply_Yomega(inst: HeckeInstanceC, f: LaurentPoly
                 ) -> tuple[LaurentPoly, HeckeInstanceC]:
    """Y_omega = (T_n...T_1)(T_n...T_2)...(T_n) sigma, sigma applied first."""
    g, tgt = apply_sigma(inst, f)
    return apply_word_c(tgt, yomega_blocks(inst.n), g), tgt


# === spanning sets and relation suites =======================================

def monomial_box(field: ParameterField, nvars: int, lo: int, hi: int):
    """All Laurent monomials with every exponent in [lo, hi]."""
    for e in itertools.product(range(lo, hi + 1), repeat=nvars):
        yield LaurentPoly.monomial(field, nvars, e)


def _check_on_box(name: str, lhs, rhs, monomials) -> tuple[str, bool]:
    for f in monomials:
        if lhs(f) != rhs(f):
            return name, False
    return name, True


def relation_suite_a(inst: HeckeInstanceA, box: int = 2) -> list[tuple[str, bool]]:
    """All defining relations of the type A presentation on an exponent box."""
    n = inst.n
    mons = list(monomial_box(inst.field, n, -box, box))
    T = lambda i: (lambda f: _apply_token_a(inst, ("T", i, 1), f))
    Y = lambda i, s=1: (lambda f: apply_Yi_A(inst, i, f, s))
    results = []

    def add(name, lhs, rhs):
        results.append(_check_on_box(name, lhs, rhs, mons))

    t, one = inst.t, inst.field.one()
    for i in range(n):
        add(f"quadratic (T_{i}-t)(T_{i}+1)=0",
            lambda f, i=i: T(i)(T(i)(f)) + T(i)(f).scale(one - t),
            lambda f: f.scale(t))
    if n >= 3:
        for i in range(n):
            j = (i + 1) % n
            add(f"braid T_{i}T_{j}T_{i}=T_{j}T_{i}T_{j}",
                lambda f, i=i, j=j: T(i)(T(j)(T(i)(f))),
                lambda f, i=i, j=j: T(j)(T(i)(T(j)(f))))
    for i in range(n):
        for j in range(i + 2, n):
            if (j - i) % n == n - 1:
                continue
            add(f"commute T_{i}T_{j}",
                lambda f, i=i, j=j: T(i)(T(j)(f)),
                lambda f, i=i, j=j: T(j)(T(i)(f)))
    for i in range(n):
        add(f"rotation pi T_{i} = T_{(i - 1) % n} pi",
            lambda f, i=i: apply_pi(inst, T(i)(f)),
            lambda f, i=i: T((i - 1) % n)(apply_pi(inst, f)))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            add(f"commute Y_{i}Y_{j}",
                lambda f, i=i, j=j: Y(i)(Y(j)(f)),
                lambda f, i=i, j=j: Y(j)(Y(i)(f)))
    for i in range(1, n):
        add(f"T_{i} Y_{i + 1} = Y_{i} Tbar_{i}",
            lambda f, i=i: T(i)(Y(i + 1)(f)),
            lambda f, i=i: Y(i)(_tbar_a(inst, i, f)))
        add(f"T_{i} Y_{i}^-1 T_{i} = t Y_{i + 1}^-1",
            lambda f, i=i: T(i)(Y(i, -1)(T(i)(f))),
            lambda f, i=i: Y(i + 1, -1)(f).scale(t))
    one_poly = LaurentPoly.one(inst.field, n)
    for i in range(1, n + 1):
        got = apply_Yi_A(inst, i, one_poly)
        want = one_poly.scale(inst.field.monomial(inst.tv ** (n - i)))
        results.append((f"Y_{i}(1) = t^{n - i}", got == want))
    return results


def relation_suite_c(inst: HeckeInstanceC, box: int = 2) -> list[tuple[str, bool]]:
    """Defining relations of the type C presentation (no braids at n=1)."""
    n = inst.n
    mons = list(monomial_box(inst.field, n, -box, box))
    T = lambda i: (lambda f: _t_c(inst, i, f))
    Y = lambda i, s=1: (lambda f: apply_Yi_C(inst, i, f, s))
    results = []

    def add(name, lhs, rhs):
        results.append(_check_on_box(name, lhs, rhs, mons))

    one = inst.field.one()
    for i in range(n + 1):
        kappa = _quad_scalar_c(inst, i)
        # (T_i - kappa)(T_i + 1) = 0 written as T^2 = (kappa - 1) T + kappa
        add(f"quadratic at node {i}",
            lambda f, i=i: T(i)(T(i)(f)),
            lambda f, i=i, kappa=kappa:
                T(i)(f).scale(kappa - one) + f.scale(kappa))
        add(f"Tbar_{i} T_{i} = quad scalar",
            lambda f, i=i: _tbar_c(inst, i, T(i)(f)),
            lambda f, kappa=kappa: f.scale(kappa))
    if n >= 2:
        for i in range(1, n - 1):
            add(f"braid T_{i}T_{i + 1}T_{i}",
                lambda f, i=i: T(i)(T(i + 1)(T(i)(f))),
                lambda f, i=i: T(i + 1)(T(i)(T(i + 1)(f))))
        add("braid T_n T_(n-1) T_n T_(n-1) (length 4)",
            lambda f: T(n)(T(n - 1)(T(n)(T(n - 1)(f)))),
            lambda f: T(n - 1)(T(n)(T(n - 1)(T(n)(f)))))
        add("braid T_0 T_1 T_0 T_1 (length 4)",
            lambda f: T(0)(T(1)(T(0)(T(1)(f)))),
            lambda f: T(1)(T(0)(T(1)(T(0)(f)))))
        for i in range(0, n + 1):
            for j in range(i + 2, n + 1):
                add(f"commute T_{i}T_{j}",
                    lambda f, i=i, j=j: T(i)(T(j)(f)),
                    lambda f, i=i, j=j: T(j)(T(i)(f)))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            add(f"commute Y_{i}Y_{j}",
                lambda f, i=i, j=j: Y(i)(Y(j)(f)),
                lambda f, i=i, j=j: Y(j)(Y(i)(f)))
    t = inst.t
    for i in range(1, n):
        add(f"T_{i} Y_{i}^-1 T_{i} = t Y_{i + 1}^-1",
            lambda f, i=i: T(i)(Y(i, -1)(T(i)(f))),
            lambda f, i=i: Y(i + 1, -1)(f).scale(t))
    q_cd = inst.q / (inst.c * inst.d)
    coef_y = -(inst.field.monomial(inst.tv ** (2 - 2 * n)) * q_cd)
    coef_t = -(inst.field.monomial(inst.tv ** (1 - n)) * (q_cd + one))
    add("T_n Y_n^-1 T_n = -t^(2-2n)(q/cd) Y_n - t^(1-n)(q/cd + 1) T_n",
        lambda f: T(n)(Y(n, -1)(T(n)(f))),
        lambda f: Y(n)(f).scale(coef_y) + T(n)(f).scale(coef_t))
    return results


# === the rank-doubling embedding =============================================

def _theta_images(n: int):
    """x_i -> z_i (i <= n) and x_{n+i} -> 1/z_{n+1-i} on 2n variables."""
    one = ParamMonomial.one()
    images = []
    for i in range(n):
        images.append((one, tuple(int(k == i) for k in range(n))))
    for i in range(n):
        images.append((one, tuple(-int(k == n - 1 - i) for k in range(n))))
    return images


def embedding_instances(n_c: int) -> tuple[HeckeInstanceC, HeckeInstanceA]:
    """The type C instance at (sqrt(t), -sqrt(t), sqrt(qt), -sqrt(qt)) and
    the generic rank-2n type A instance over the same field."""
    fld = ParameterField.type_c()
    g = ParamMonomial.gen
    rt = g("t") ** Fraction(1, 2)
    rqt = (g("q") * g("t")) ** Fraction(1, 2)
    inst_c = HeckeInstanceC(n_c, fld, g("q"), g("t"), rt, -rt, rqt, -rqt)
    inst_a = HeckeInstanceA(2 * n_c, fld, g("q"), g("t"))
    return inst_c, inst_a


def _invert_tokens(word):
    inv = []
    for tok in reversed(word):
        if tok[0] == "pi":
            inv.append(("pi", -tok[1]))
        else:
            inv.append((tok[0], tok[1], -tok[2]))
    return inv


def braid_y_tokens_a(m: int, i: int, exp: int = 1):
    """Braid lift of the translation by eps_i on m strands:
    T_i ... T_{m-1} pi T_1^{-1} ... T_{i-1}^{-1}.  Differs from the
    Hecke normalization of y_word_a by the scalar t^(i-1)."""
    word = [("T", j, 1) for j in range(i, m)] + [("pi", 1)] + \
           [("T", j, -1) for j in range(1, i)]
    return word if exp == 1 else _invert_tokens(word)


def embed_letter_tokens(n: int, j: int, sign: int = 1):
    """Image on 2n strands of the rank-n C-presentation letter c_j:
    c_0 -> T_0, c_n -> T_n, and c_j -> T_j T_{2n-j} for 0 < j < n.
    The two factors of an interior image commute, so the inverse image
    may keep the same letter order."""
    if j == 0 or j == n:
        return [("T", j, sign)]
    return [("T", j, sign), ("T", 2 * n - j, sign)]


def embed_word_tokens(n: int, letters):
    """Image of a C-letter word given as (letter, sign) pairs, leftmost
    outermost, as tokens on 2n strands."""
    toks = []
    for j, s in letters:
        toks += embed_letter_tokens(n, j, s)
    return toks


def braid_yc_letters(n: int, i: int):
    """Braid lift of the i-th translation in the C presentation:
    c_i ... c_n c_{n-1} ... c_1 c_0 c_1^{-1} ... c_{i-1}^{-1}."""
    return ([(j, 1) for j in range(i, n + 1)]
            + [(j, 1) for j in range(n - 1, -1, -1)]
            + [(j, -1) for j in range(1, i)])


def verify_embedding_C_in_A(n_c: int, degree_bound: int = 1) -> dict:
    """Check the rank-doubling map c_0 -> T_0, c_n -> T_n, c_j -> T_j T_{2n-j}
    from the rank-n C presentation into the 2n-strand A presentation.

    Three layers, each an operator identity on every monomial with
    exponents in [-degree_bound, degree_bound]^(2n):

    * the images satisfy the C-presentation braid relations, so the map
      is a homomorphism of braid groups;
    * the braid lifts of the C-side translations map to braid-normalized
      A-side translations, Y_i -> Y_i Y_(2n+1-i)^(-1), and the positive
      half-twist word (T_n...T_1)(T_n...T_2)...(T_n) maps to
      Y_1...Y_n pi^(-n) (all letters braid-normalized, i.e. using honest
      inverses rather than bar-letters);
    * the end letters fold through x_i -> z_i, x_{n+i} -> 1/z_{n+1-i}:
      the images of c_0 and c_n intertwine with the specialized C
      operators of embedding_instances (whose quadratics (X+1)(X-t)
      match the A letters), and at rank one -- where there are no
      interior letters -- the translation images fold as well.

    Interior images do not fold: on z-monomials T_j T_{2n-j} acts as two
    independent t-strings whose convolution is not a single Hecke letter
    at any parameter.  The report lists failing (check, exponent) pairs
    and records the f=1 values of the Hecke-normalized Y_i Y_(2n-i)^(-1).
    """
    inst_c, inst_a = embedding_instances(n_c)
    n, m = n_c, 2 * n_c
    images = _theta_images(n)
    theta = lambda f: f.substitute(images, n)

    def word_op(tokens):
        return lambda f: apply_word_a(inst_a, tokens, f)

    pairs = []

    # C-presentation braid relations of the images.
    def img(letters):
        return word_op(embed_word_tokens(n, letters))

    def add_braid(name, left, right):
        pairs.append((name, img([(j, 1) for j in left]),
                      lambda f, r=right: img([(j, 1) for j in r])(f)))

    if n >= 2:
        add_braid("braid c_0 c_1", [0, 1, 0, 1], [1, 0, 1, 0])
        add_braid(f"braid c_{n-1} c_{n}", [n - 1, n, n - 1, n],
                  [n, n - 1, n, n - 1])
        for j in range(1, n - 1):
            add_braid(f"braid c_{j} c_{j+1}", [j, j + 1, j],
                      [j + 1, j, j + 1])
        for j in range(n + 1):
            for k in range(j + 2, n + 1):
                add_braid(f"braid c_{j} c_{k} commute", [j, k], [k, j])

    # Braid lifts of the translations.
    for i in range(1, n + 1):
        lhs = word_op(embed_word_tokens(n, braid_yc_letters(n, i)))
        rhs = word_op(braid_y_tokens_a(m, i)
                      + braid_y_tokens_a(m, m + 1 - i, -1))
        pairs.append((f"Y_{i} -> Y_{i} Y_{m + 1 - i}^-1", lhs, rhs))
    half_twist = []
    for i in range(1, n + 1):
        half_twist += [(j, 1) for j in range(n, i - 1, -1)]
    tail_rhs = []
    for i in range(1, n + 1):
        tail_rhs += braid_y_tokens_a(m, i)
    tail_rhs += [("pi", -n)]
    pairs.append(("half twist -> Y_1...Y_n pi^-n",
                  word_op(embed_word_tokens(n, half_twist)),
                  word_op(tail_rhs)))

    # Folding of the end letters through theta.
    folds = [("fold c_0", word_op([("T", 0, 1)]),
              lambda g: apply_T0_C(inst_c, g)),
             ("fold c_n", word_op([("T", n, 1)]),
              lambda g: apply_Tn_C(inst_c, g))]
    if n == 1:
        folds.append(("fold Y_1 (rank 1)",
                      word_op(braid_y_tokens_a(2, 1)
                              + braid_y_tokens_a(2, 2, -1)),
                      lambda g: apply_word_c(
                          inst_c, [("T", 1, 1), ("T", 0, 1)], g)))

    failures = []
    box = range(-degree_bound, degree_bound + 1)
    for e in itertools.product(box, repeat=m):
        f = LaurentPoly.monomial(inst_a.field, m, e)
        for name, lhs, rhs in pairs:
            if lhs(f) != rhs(f):
                failures.append((name, e))
        g = theta(f)
        for name, op_a, op_c in folds:
            if theta(op_a(f)) != op_c(g):
                failures.append((name, e))

    one = LaurentPoly.one(inst_a.field, m)
    y_on_one = {}
    for i in range(1, n + 1):
        val = apply_Yi_A(inst_a, i, apply_Yi_A(inst_a, m - i, one, -1))
        expected = inst_a.field.monomial(inst_a.tv ** (m - 2 * i))
        assert val == one.scale(expected)
        y_on_one[i] = str(expected)
    return {"ok": not failures, "rank": n_c, "failures": failures,
            "y_on_one": y_on_one}
