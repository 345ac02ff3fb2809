"""Sparse Laurent polynomials in n variables over the parameter field.

Exponents are integers, or Fractions from a single integral coset per
variable (the coset denominators in use are 1, 2 and 2n: half-integral
Koornwinder weights and the determinant-root shift (x_1...x_n)^(s/(2n))).
`Fraction(k, 1)` hashes and compares equal to `int(k)`, so mixed keys are
normalized to `int` whenever possible and the dict stays consistent.

Coefficients are `ParamRat`.  Variable substitutions send each variable to a
signed parameter monomial times a Laurent monomial in the target variables,
which covers every specialization in this package (x_1 -> q x_n, x_i -> 1/x_i,
x_{2i} -> t z_i, x_i -> q^(1/4) z_i, ...).
"""

from __future__ import annotations

from fractions import Fraction

from .params import (NSYM, ParamMonomial, ParamRat, ParameterField,
                     convert_field, param_substitute)


def _norm(e):
    if isinstance(e, Fraction) and e.denominator == 1:
        return int(e)
    return e


def norm_exps(exps) -> tuple:
    return tuple(_norm(Fraction(e) if not isinstance(e, (int, Fraction)) else e)
                 for e in exps)


class LaurentPoly:
    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: ParameterField, nvars: int, terms: dict):
        self.field = field
        self.nvars = nvars
        self.terms = {e: c for e, c in terms.items() if not c.is_zero()}

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, field: ParameterField, nvars: int) -> "LaurentPoly":
        return cls(field, nvars, {})

    @classmethod
    def const(cls, field: ParameterField, nvars: int, c: ParamRat) -> "LaurentPoly":
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, field: ParameterField, nvars: int) -> "LaurentPoly":
        return cls.const(field, nvars, field.one())

    @classmethod
    def monomial(cls, field: ParameterField, nvars: int, exps,
                 coeff: ParamRat | None = None) -> "LaurentPoly":
        exps = norm_exps(exps)
        assert len(exps) == nvars
        return cls(field, nvars, {exps: coeff if coeff is not None else field.one()})

    @classmethod
    def var(cls, field: ParameterField, nvars: int, i: int) -> "LaurentPoly":
        """The variable x_i (1-indexed)."""
        e = [0] * nvars
        e[i - 1] = 1
        return cls.monomial(field, nvars, e)

    # -- basic queries -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps) -> ParamRat:
        return self.terms.get(norm_exps(exps), self.field.scalar(0))

    def support(self):
        return set(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        assert self.nvars == other.nvars
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        return LaurentPoly(self.field, self.nvars, out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.field, self.nvars,
                           {e: -c for e, c in self.terms.items()})

    def scale(self, c: ParamRat) -> "LaurentPoly":
        if c.is_zero():
            return LaurentPoly.zero(self.field, self.nvars)
        return LaurentPoly(self.field, self.nvars,
                           {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, ParamRat):
            return self.scale(other)
        assert isinstance(other, LaurentPoly) and self.nvars == other.nvars
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = norm_exps(tuple(a + b for a, b in zip(e1, e2)))
                c = c1 * c2
                s = out.get(e)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        return LaurentPoly(self.field, self.nvars, out)

    def __pow__(self, k: int) -> "LaurentPoly":
        assert k >= 0
        out = LaurentPoly.one(self.field, self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def shift_all(self, s) -> "LaurentPoly":
        """Multiply by (x_1...x_n)^s for a rational s."""
        s = Fraction(s)
        if s == 0:
            return self
        return LaurentPoly(self.field, self.nvars, {
            norm_exps(tuple(e_i + s for e_i in e)): c
            for e, c in self.terms.items()})

    # -- substitutions ------------------------------------------------------
    def swap_vars(self, i: int, j: int) -> "LaurentPoly":
        """Exchange x_i and x_j (1-indexed)."""
        i, j = i - 1, j - 1
        out = {}
        for e, c in self.terms.items():
            ee = list(e)
            ee[i], ee[j] = ee[j], ee[i]
            out[tuple(ee)] = c
        return LaurentPoly(self.field, self.nvars, out)

    def substitute(self, images, new_nvars: int,
                   target_field: ParameterField | None = None) -> "LaurentPoly":
        """Map x_i -> images[i-1] = (ParamMonomial, exponent tuple in new vars).

        Coefficients are converted with `convert_field` when the target field
        differs (root orders must allow all exponents present).
        """
        field = target_field or self.field
        out: dict = {}
        for e, c in self.terms.items():
            m = ParamMonomial.one()
            new_e = [Fraction(0)] * new_nvars
            for i, p in enumerate(e):
                if p == 0:
                    continue
                pm, exps = images[i]
                m = m * (pm ** p)
                for k, ek in enumerate(exps):
                    new_e[k] += Fraction(ek) * p
            coeff = convert_field(c, field) if field is not self.field else c
            coeff = coeff * field.monomial(m)
            key = norm_exps(new_e)
            s = out.get(key)
            s = coeff if s is None else s + coeff
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return LaurentPoly(field, new_nvars, out)

    def map_coefficients(self, fn, target_field: ParameterField | None = None
                         ) -> "LaurentPoly":
        field = target_field or self.field
        out = {}
        for e, c in self.terms.items():
            v = fn(c)
            if not v.is_zero():
                out[e] = v
        return LaurentPoly(field, self.nvars, out)

    def subs_params(self, mapping: dict[str, ParamMonomial],
                    target_field: ParameterField | None = None) -> "LaurentPoly":
        """Apply a base-parameter substitution to every coefficient."""
        field = target_field or self.field
        return self.map_coefficients(
            lambda c: param_substitute(c, mapping, field), field)

    # -- display ------------------------------------------------------------
    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, key=lambda k: (-sum(Fraction(x) for x in k),
                                                   tuple(-Fraction(x) for x in k))):
            c = self.terms[e]
            mono = "*".join(self._var_str(i + 1, p) for i, p in enumerate(e) if p)
            cs = str(c)
            if mono:
                if cs == "1":
                    bits.append(mono)
                elif cs == "-1":
                    bits.append("-" + mono)
                elif ("+" in cs or (" - " in cs) or "/" in cs):
                    bits.append(f"({cs})*{mono}")
                else:
                    bits.append(f"{cs}*{mono}")
            else:
                bits.append(cs if ("+" not in cs and "/" not in cs) else f"({cs})")
        return " + ".join(bits).replace("+ -", "- ")

    @staticmethod
    def _var_str(i: int, p) -> str:
        if p == 1:
            return f"x{i}"
        if isinstance(p, Fraction) and p.denominator != 1:
            return f"x{i}^({p.numerator}/{p.denominator})"
        return f"x{i}^{p}"

    __repr__ = __str__


def substitute_vars(f: LaurentPoly, images, new_nvars: int,
                    target_field: ParameterField | None = None) -> LaurentPoly:
    """Specialize each x_i to a signed parameter monomial times a z-monomial.

    `images[i-1] = (ParamMonomial, exponent tuple over the new variables)`.

    >>> from .params import ParameterField, ParamMonomial
    >>> F = ParameterField.type_a(2)
    >>> f = LaurentPoly.var(F, 2, 1) + LaurentPoly.var(F, 2, 2)
    >>> half = (ParamMonomial.one(), (Fraction(1, 2),))
    >>> neg_half = (-ParamMonomial.one(), (Fraction(1, 2),))
    >>> substitute_vars(f, [half, neg_half], 1).is_zero()
    True
    >>> print(substitute_vars(f * f, [half, neg_half], 1))
    0
    >>> prod = LaurentPoly.var(F, 2, 1) * LaurentPoly.var(F, 2, 2)
    >>> print(substitute_vars(prod, [half, neg_half], 1))
    -x1
    """
    return f.substitute(images, new_nvars, target_field)


def _half_var(i: int, n: int, sign: int):
    e = [Fraction(0)] * n
    e[i] = Fraction(1, 2)
    pm = ParamMonomial.one() if sign > 0 else -ParamMonomial.one()
    return (pm, tuple(e))


def plethysm_double_sqrt(f: LaurentPoly,
                         target_field: ParameterField | None = None
                         ) -> LaurentPoly:
    """Specialize x_(2i-1) -> sqrt(z_i), x_(2i) -> -sqrt(z_i).

    The result must land in integer powers of z (a residual half-integral
    exponent raises ValueError: the input was not even in each +/- pair).
    """
    assert f.nvars % 2 == 0
    n = f.nvars // 2
    images = []
    for i in range(n):
        images.append(_half_var(i, n, +1))
        images.append(_half_var(i, n, -1))
    out = substitute_vars(f, images, n, target_field)
    for e in out.terms:
        if any(isinstance(p, Fraction) and p.denominator != 1 for p in e):
            raise ValueError("residual half-integral exponent "
                             f"{e} after the +/-sqrt specialization")
    return out


def plethysm_t_pair(f: LaurentPoly,
                    target_field: ParameterField | None = None) -> LaurentPoly:
    """Specialize x_(2i-1) -> z_i, x_(2i) -> t z_i."""
    assert f.nvars % 2 == 0
    n = f.nvars // 2
    one = ParamMonomial.one()
    t = ParamMonomial.gen("t")
    images = []
    for i in range(n):
        e = tuple(int(k == i) for k in range(n))
        images.append((one, e))
        images.append((t, e))
    return substitute_vars(f, images, n, target_field)


def plethysm_q_pair(f: LaurentPoly,
                    target_field: ParameterField | None = None) -> LaurentPoly:
    """Specialize the first block x_i -> q^(1/2) z_i and the second x_(n+i) -> z_i.

    >>> from .params import ParameterField, ParamMonomial
    >>> F = ParameterField.type_a(2)
    >>> f = LaurentPoly.var(F, 2, 1) + LaurentPoly.var(F, 2, 2)
    >>> print(plethysm_q_pair(f))
    (q^(1/2) + 1)*x1
    """
    assert f.nvars % 2 == 0
    n = f.nvars // 2
    one = ParamMonomial.one()
    rq = ParamMonomial.gen("q") ** Fraction(1, 2)
    images = []
    for i in range(n):
        e = tuple(int(k == i) for k in range(n))
        images.append((rq, e))
    for i in range(n):
        e = tuple(int(k == i) for k in range(n))
        images.append((one, e))
    return substitute_vars(f, images, n, target_field)


def dict_to_poly(field: ParameterField, nvars: int, d: dict) -> LaurentPoly:
    """Build from {exps: ParamRat-or-Fraction} with exponent normalization."""
    out = {}
    for e, c in d.items():
        if not isinstance(c, ParamRat):
            c = field.scalar(c)
        key = norm_exps(e)
        out[key] = out.get(key, field.scalar(0)) + c
    return LaurentPoly(field, nvars, out)
