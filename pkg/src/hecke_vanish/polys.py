"""Joint eigenpolynomials of the Y operators and the functionals they induce.

For a rank-n type A instance the commuting operators Y_1..Y_n act on Laurent
polynomials triangularly with respect to the order "sorted exponent strictly
dominated, or equal sorted exponent": the joint eigenfunction E_nu attached
to a weight nu is the unique polynomial

    E_nu = x^nu + (strictly lower terms),   Y_i E_nu = y_i(nu) E_nu,

where y_i(nu) is read off as the coefficient of x^nu in Y_i(x^nu) (the
diagonal matrix entry), never from a closed formula, so the construction is
insensitive to how the Y words are normalized.  The type C story is the same
with signed rearrangements in the orbits and the six-parameter Y operators.

The solver works class by class: the dominance ideal below nu splits into
finite-Weyl orbits, the Y action is block triangular over them, the top
block is solved as a one-dimensional joint kernel and each lower block as an
inhomogeneous system driven by the already-solved higher blocks.  Singular
blocks signal a non-generic parameter specialization and raise
NonGenericParameters rather than returning wrong output.

Symmetric polynomials P_lambda (and their type C analogues K_lambda) are the
images of E_lambda under the unweighted finite Hecke symmetrizer sum(T_w),
rescaled monic at x^lambda; the result is characterized by T_i P = t P
(interior), plus T_n K = -ab K in type C.

expand_in_E peels a polynomial into the E basis by repeatedly subtracting
the eigenpolynomial of a maximal support exponent; normalized_integral is
the coefficient of E_0 in that expansion, which realizes the normalized
torus integrals of both presentations (for type C this is the Koornwinder
density functional; on symmetric inputs it computes the same value as the
symmetric-kernel integral).

Chamber variants: E^C_lambda = U(w)^{-1} E_{w^{-1}lambda} (rescaled monic)
for the chamber C = C_0^w, a joint eigenfunction of the chambered
translation operators Y^C; central_sum_check verifies that orbit sums
sum(Y^C_mu) are central and chamber independent.

gram_schmidt_P is an independent construction of P_lambda from the power-sum
inner product <p_lam, p_mu> = delta z_lam prod (1-q^(lam_i))/(1-t^(lam_i)),
used as a cross-check oracle; it shares no code with the Hecke solver.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from fractions import Fraction

from .combinat import (class_le_a, class_le_c, classes_below_a,
                       classes_below_c, dominance_leq, linear_extension,
                       maximal_classes, orbit_a, orbit_c, partitions, psums,
                       sort_key_a, sort_key_c)
from .hecke import (HeckeInstanceA, HeckeInstanceC, apply_pi, apply_T0_A,
                    apply_signed_word, apply_Ti_A, apply_Tn_C, apply_Yi_A,
                    apply_Yi_C)
from .laurent import LaurentPoly, norm_exps
from .params import ParamRat
from .weyl import Chamber, chamber_word, chamber_y, fin_inverse, \
    fin_reduced_word


class NonGenericParameters(RuntimeError):
    """A linear solve degenerated: the parameter values sit on a locus where
    the requested eigenpolynomial is not uniquely determined."""


class TriangularityError(RuntimeError):
    """The basis-expansion loop exceeded its iteration guard, which can only
    happen if some constructed E fails strict triangularity."""


class ChamberNormalizationError(RuntimeError):
    """The chamber eigenpolynomial has x^lambda coefficient zero, so the
    monic normalization does not exist for this chamber."""


@dataclass(frozen=True)
class EBasisElement:
    """A joint Y eigenfunction: monic at x^nu, triangular below it."""

    nu: tuple
    poly: LaurentPoly
    eigenvalues: tuple  # one ParamRat per Y_i


@dataclass(frozen=True)
class PBasisElement:
    """A Weyl-symmetric eigenpolynomial, monic at the dominant x^lambda."""

    lam: tuple
    poly: LaurentPoly


# === exact linear algebra over the parameter field ===========================

def _nullspace(rows):
    """Basis of the kernel of the matrix given as a list of ParamRat rows."""
    if not rows:
        return []
    ncols = len(rows[0])
    mat = [list(r) for r in rows]
    pivots = []  # (row, col)
    rank_row = 0
    for col in range(ncols):
        piv = None
        for r in range(rank_row, len(mat)):
            if not mat[r][col].is_zero():
                piv = r
                break
        if piv is None:
            continue
        mat[rank_row], mat[piv] = mat[piv], mat[rank_row]
        inv = mat[rank_row][col].inverse()
        mat[rank_row] = [x * inv for x in mat[rank_row]]
        for r in range(len(mat)):
            if r != rank_row and not mat[r][col].is_zero():
                factor = mat[r][col]
                mat[r] = [x - factor * y for x, y in zip(mat[r],
                                                         mat[rank_row])]
        pivots.append((rank_row, col))
        rank_row += 1
    field = rows[0][0].field
    zero, one = field.scalar(0), field.one()
    pivot_cols = {c for _, c in pivots}
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        vec = [zero] * ncols
        vec[free] = one
        for r, c in pivots:
            vec[c] = -mat[r][free]
        basis.append(vec)
    return basis


def _solve_unique(rows, rhs):
    """Solve the stacked system exactly; raise if the solution is not unique
    or the system is inconsistent (both indicate a degenerate parameter
    locus for our block solves)."""
    ncols = len(rows[0]) if rows else 0
    mat = [list(r) + [b] for r, b in zip(rows, rhs)]
    rank_row = 0
    pivots = []
    for col in range(ncols):
        piv = None
        for r in range(rank_row, len(mat)):
            if not mat[r][col].is_zero():
                piv = r
                break
        if piv is None:
            continue
        mat[rank_row], mat[piv] = mat[piv], mat[rank_row]
        inv = mat[rank_row][col].inverse()
        mat[rank_row] = [x * inv for x in mat[rank_row]]
        for r in range(len(mat)):
            if r != rank_row and not mat[r][col].is_zero():
                factor = mat[r][col]
                mat[r] = [x - factor * y for x, y in zip(mat[r],
                                                         mat[rank_row])]
        pivots.append((rank_row, col))
        rank_row += 1
    if len(pivots) < ncols:
        raise NonGenericParameters("rank-deficient block solve")
    for r in range(rank_row, len(mat)):
        if not mat[r][ncols].is_zero():
            raise NonGenericParameters("inconsistent block solve")
    sol = [None] * ncols
    for r, c in pivots:
        sol[c] = mat[r][ncols]
    return sol


# === the class-block eigen-solver =============================================

def _kind_tools(kind: str):
    if kind == "A":
        return sort_key_a, class_le_a, classes_below_a, orbit_a
    if kind == "C":
        return sort_key_c, class_le_c, classes_below_c, orbit_c
    raise ValueError(f"unknown basis kind {kind!r}")


def _apply_Y(inst, kind: str, i: int, f: LaurentPoly) -> LaurentPoly:
    return apply_Yi_A(inst, i, f) if kind == "A" else apply_Yi_C(inst, i, f)


_E_CACHE: dict = {}
_E_LOCK = threading.Lock()


def _solve_E_integer(inst, kind: str, mu: tuple) -> EBasisElement:
    """The monic joint eigenfunction at an integer weight (nonnegative in
    type A after the caller's uniform shift)."""
    cache_key = (inst, kind, mu)
    with _E_LOCK:
        hit = _E_CACHE.get(cache_key)
    if hit is not None:
        return hit
    n = inst.n
    field = inst.field
    zero = field.scalar(0)
    sort_key, class_le, classes_below, orbit = _kind_tools(kind)
    classes = linear_extension(classes_below(sort_key(mu)), class_le)
    members = {cls: orbit(cls) for cls in classes}
    index = {e: cls for cls in classes for e in members[cls]}
    action = [dict() for _ in range(n)]
    for cls in classes:
        for e in members[cls]:
            mono = LaurentPoly.monomial(field, n, e)
            for i in range(1, n + 1):
                g = _apply_Y(inst, kind, i, mono)
                for te in g.terms:
                    if te not in index:
                        raise AssertionError(
                            f"Y_{i} left the dominance ideal at {e} -> {te}")
                action[i - 1][e] = g.terms
    # Diagonal eigenvalue read: the coefficient of x^mu in Y_i(x^mu).
    eig = [action[i][mu].get(mu, zero) for i in range(n)]
    comp: dict = {}
    for ci, cls in enumerate(classes):
        mem = members[cls]
        rows, rhs = [], []
        for i in range(n):
            for r_e in mem:
                row = []
                for c_e in mem:
                    a = action[i][c_e].get(r_e, zero)
                    if c_e == r_e:
                        a = a - eig[i]
                    row.append(a)
                b = zero
                for h_e, ch in comp.items():
                    contrib = action[i][h_e].get(r_e)
                    if contrib is not None:
                        b = b - ch * contrib
                rows.append(row)
                rhs.append(b)
        if ci == 0:
            basis = _nullspace(rows)
            if len(basis) != 1:
                raise NonGenericParameters(
                    f"top joint eigenspace at {mu} has dimension "
                    f"{len(basis)}")
            vec = basis[0]
            lead = vec[mem.index(mu)]
            if lead.is_zero():
                raise NonGenericParameters(
                    f"top eigenvector at {mu} has zero leading coefficient")
            inv = lead.inverse()
            vec = [x * inv for x in vec]
        else:
            vec = _solve_unique(rows, rhs)
        for e, val in zip(mem, vec):
            if not val.is_zero():
                comp[e] = val
    poly = LaurentPoly(field, n, dict(comp))
    eigenvalues = tuple(eig)
    for i in range(1, n + 1):
        if _apply_Y(inst, kind, i, poly) != poly.scale(eigenvalues[i - 1]):
            raise AssertionError(f"constructed E_{mu} is not a Y_{i} "
                                 "eigenfunction")
    elem = EBasisElement(mu, poly, eigenvalues)
    with _E_LOCK:
        _E_CACHE.setdefault(cache_key, elem)
    return elem


def _as_fraction_tuple(nu) -> tuple:
    return tuple(Fraction(v) for v in nu)


def nonsym_E_A(inst: HeckeInstanceA, nu) -> EBasisElement:
    """Nonsymmetric eigenpolynomial of the type A Y operators.

    Entries of nu may live in a shifted lattice (all pairwise differences
    integral); the uniform shift by min(nu) reduces to the nonnegative
    integer case since Y_i ((x_1...x_n)^s f) = q^s (x_1...x_n)^s Y_i f.
    """
    nu_f = _as_fraction_tuple(nu)
    shift = min(nu_f) if nu_f else Fraction(0)
    mu = []
    for v in nu_f:
        d = v - shift
        if d.denominator != 1:
            raise ValueError(f"weight {nu} has non-integral differences")
        mu.append(int(d))
    base = _solve_E_integer(inst, "A", tuple(mu))
    if shift == 0:
        return EBasisElement(tuple(mu), base.poly, base.eigenvalues)
    qs = inst.field.monomial(inst.qv ** shift)
    poly = base.poly.shift_all(shift)
    eigenvalues = tuple(qs * y for y in base.eigenvalues)
    key = tuple(int(v) if v.denominator == 1 else v for v in nu_f)
    return EBasisElement(key, poly, eigenvalues)


def nonsym_E_C(inst: HeckeInstanceC, nu) -> EBasisElement:
    """Nonsymmetric eigenpolynomial of the type C Y operators (nu integral;
    the solve runs over signed rearrangement orbits)."""
    nu = tuple(int(v) for v in nu)
    return _solve_E_integer(inst, "C", nu)


# === eigenvalue multisets ====================================================

def _multiset_eq(xs, ys) -> bool:
    xs, ys = list(xs), list(ys)
    if len(xs) != len(ys):
        return False
    for x in xs:
        for i, y in enumerate(ys):
            if x == y:
                del ys[i]
                break
        else:
            return False
    return True


def expected_spectrum_a(inst: HeckeInstanceA, lam) -> list:
    """The multiset {q^(lam_j) t^(n-j)} for the sorted weight lam."""
    n = inst.n
    lam = sorted((Fraction(v) for v in lam), reverse=True)
    out = []
    for j, lj in enumerate(lam, start=1):
        out.append(inst.field.monomial(inst.qv ** lj * inst.tv ** (n - j)))
    return out


def spectrum_a_ok(inst: HeckeInstanceA, elem: EBasisElement) -> bool:
    return _multiset_eq(elem.eigenvalues, expected_spectrum_a(inst, elem.nu))


def expected_spectrum_c(inst: HeckeInstanceC, lam) -> list:
    """The multiset {q^(lam_j) t^(2n-1-j) abcd/q} + {q^(-lam_j) t^(j-1)} for
    lam the decreasing absolute-value rearrangement."""
    n = inst.n
    abcd_over_q = inst.field.monomial(
        inst.av * inst.bv * inst.cv * inst.dv * inst.qv ** (-1))
    lam = sorted((abs(int(v)) for v in lam), reverse=True)
    out = []
    for j, lj in enumerate(lam, start=1):
        out.append(inst.field.monomial(inst.qv ** lj
                                       * inst.tv ** (2 * n - 1 - j))
                   * abcd_over_q)
        out.append(inst.field.monomial(inst.qv ** (-lj)
                                       * inst.tv ** (j - 1)))
    return out


def spectrum_c_ok(inst: HeckeInstanceC, elem: EBasisElement) -> bool:
    twist = inst.field.monomial(
        inst.av * inst.bv * inst.cv * inst.dv
        * inst.tv ** (2 * inst.n - 2) * inst.qv ** (-1))
    have = list(elem.eigenvalues) + [twist * y.inverse()
                                     for y in elem.eigenvalues]
    return _multiset_eq(have, expected_spectrum_c(inst, elem.nu))


# === basis expansion and the normalized integral =============================

def _pick_peel_exponent(support, kind: str):
    sort_key, class_le, _, _ = _kind_tools(kind)
    if kind == "A":
        # Different totals are incomparable components; guard the order.
        base_le = class_le
        class_le = lambda k1, k2: sum(k1) == sum(k2) and base_le(k1, k2)
    keys = {sort_key(e) for e in support}
    top = sorted(maximal_classes(keys, class_le))[-1]
    return max(e for e in support if sort_key(e) == top)


def expand_in_E(inst, f: LaurentPoly, basis: str = "A") -> dict:
    """Coefficients of f in the E basis, found by peeling maximal support
    exponents; the iteration guard trips only on a triangularity violation.
    """
    build = nonsym_E_A if basis == "A" else nonsym_E_C
    out: dict = {}
    work = f
    guard = 0
    bound = 16 + 4 * _ideal_size_bound(inst, f, basis)
    while not work.is_zero():
        guard += 1
        if guard > bound:
            raise TriangularityError(
                f"E expansion did not terminate within {bound} steps")
        kappa = _pick_peel_exponent(list(work.terms), basis)
        c = work.coefficient(kappa)
        elem = build(inst, kappa)
        work = work - elem.poly.scale(c)
        out[kappa] = out.get(kappa, inst.field.scalar(0)) + c
    return {k: v for k, v in out.items() if not v.is_zero()}


def _ideal_size_bound(inst, f: LaurentPoly, basis: str) -> int:
    sort_key, class_le, classes_below, orbit = _kind_tools(basis)
    total = 0
    seen = set()
    for e in f.terms:
        key = sort_key(e)
        if key in seen:
            continue
        seen.add(key)
        if basis == "A" and any(Fraction(v).denominator != 1 for v in key):
            shift = min(Fraction(v) for v in e)
            key = sort_key(tuple(Fraction(v) - shift for v in e))
            key = tuple(int(v) for v in key)
        for cls in classes_below(key):
            total += len(orbit(cls))
    return total


def normalized_integral(inst, f: LaurentPoly, basis: str = "A") -> ParamRat:
    """The coefficient of E_0 in the E expansion of f.  This equals the
    normalized torus integral of f against the instance's density (both
    presentations), and on symmetric type C inputs the symmetric-kernel
    integral."""
    if f.is_zero():
        return inst.field.scalar(0)
    zero_w = (0,) * inst.n
    coeffs = expand_in_E(inst, f, basis)
    return coeffs.get(zero_w, inst.field.scalar(0))


def bar_reverse(f: LaurentPoly) -> LaurentPoly:
    """The pairing companion f(1/x_n, ..., 1/x_1)."""
    n = f.nvars
    terms = {}
    for e, c in f.terms.items():
        terms[tuple(-e[n - 1 - i] for i in range(n))] = c
    return LaurentPoly(f.field, n, terms)


def pairing_a(inst: HeckeInstanceA, f: LaurentPoly,
              g: LaurentPoly) -> ParamRat:
    """<f, g> = normalized integral of f(x) g(1/x_n, ..., 1/x_1).

    Under this form each T_i is self-adjoint and the adjoint of the
    commuting family is the chambered family at the opposite chamber:
    <Y_nu f, g> == <f, Y^{C_opp}_{w_0 nu} g> (apply_chamber_y)."""
    return normalized_integral(inst, f * bar_reverse(g), basis="A")


# === finite Hecke symmetrizers ===============================================

def _finite_orbit_images(apply_letter, letters, start: LaurentPoly,
                         start_key, act_key):
    """BFS over a finite Coxeter group: returns {group element key: T_w f}
    where longer elements are reached by applying letters on the left."""
    images = {start_key: start}
    frontier = [start_key]
    while frontier:
        new = []
        for wk in frontier:
            for letter in letters:
                wk2 = act_key(letter, wk)
                if wk2 not in images:
                    images[wk2] = apply_letter(letter, images[wk])
                    new.append(wk2)
        frontier = new
    return images


def symmetrize_P(inst: HeckeInstanceA, lam) -> PBasisElement:
    """P_lambda: the unweighted symmetrizer sum(T_w) applied to E_lambda,
    rescaled monic at x^lambda; checked against T_i P = t P.

    Entries may be half-integral as long as they lie in a single coset of
    the integers (the uniform-shift reduction inside nonsym_E_A)."""
    lam = norm_exps(lam)
    assert list(lam) == sorted(lam, reverse=True), "lambda must be dominant"
    n = inst.n
    E = nonsym_E_A(inst, lam)

    def act_key(letter, wk):
        w = list(wk)
        w[letter - 1], w[letter] = w[letter], w[letter - 1]
        return tuple(w)

    images = _finite_orbit_images(
        lambda i, h: apply_Ti_A(inst, i, h), range(1, n),
        E.poly, tuple(range(1, n + 1)), act_key)
    total = LaurentPoly.zero(inst.field, n)
    for h in images.values():
        total = total + h
    lead = total.coefficient(lam)
    if lead.is_zero():
        raise NonGenericParameters(
            f"symmetrizer annihilates E_{lam} (zero leading coefficient)")
    poly = total.scale(lead.inverse())
    for i in range(1, n):
        assert apply_Ti_A(inst, i, poly) == poly.scale(inst.t), \
            f"P_{lam} is not T_{i} invariant"
    return PBasisElement(lam, poly)


def symmetrize_K(inst: HeckeInstanceC, lam) -> PBasisElement:
    """K_lambda: the type C symmetrizer (interior letters and the sign-flip
    letter T_n) applied to E_lambda, rescaled monic at x^lambda."""
    lam = tuple(int(v) for v in lam)
    assert list(lam) == sorted(lam, reverse=True) and lam[-1] >= 0, \
        "lambda must be a partition"
    n = inst.n
    E = nonsym_E_C(inst, lam)

    def act_key(letter, wk):
        w = list(wk)
        if letter == n:
            w[n - 1] = -w[n - 1]
        else:
            w[letter - 1], w[letter] = w[letter], w[letter - 1]
        return tuple(w)

    def letter_op(i, h):
        return apply_Tn_C(inst, h) if i == n else apply_Ti_A(inst, i, h)

    images = _finite_orbit_images(letter_op, range(1, n + 1),
                                  E.poly, tuple(range(1, n + 1)), act_key)
    total = LaurentPoly.zero(inst.field, n)
    for h in images.values():
        total = total + h
    lead = total.coefficient(lam)
    if lead.is_zero():
        raise NonGenericParameters(
            f"symmetrizer annihilates E_{lam} (zero leading coefficient)")
    poly = total.scale(lead.inverse())
    for i in range(1, n):
        assert apply_Ti_A(inst, i, poly) == poly.scale(inst.t), \
            f"K_{lam} is not T_{i} invariant"
    minus_ab = -(inst.a * inst.b)
    assert apply_Tn_C(inst, poly) == poly.scale(minus_ab), \
        f"K_{lam} is not T_n invariant"
    return PBasisElement(lam, poly)


# === chamber eigenpolynomials ================================================

def apply_chamber_y(inst: HeckeInstanceA, chamber: Chamber, mu,
                    f: LaurentPoly) -> LaurentPoly:
    """Hecke-normalized chambered translation Y^C_mu acting on f.

    The signed word from chamber_y lives in the braid group, where negative
    crossings map to genuine inverses T_i^{-1}.  The commutative family whose
    symmetric sums are central in the Hecke algebra is instead built from the
    bar letters tT_i^{-1}; the two differ by t^{<w^{-1} delta~, mu>} with
    delta~ = (0, 1, ..., n-1) and C = C_0^w.  For the standard chamber this
    normalization makes Y^{C_0}_{eps_i} agree with the plain Y_i.
    """
    g = apply_signed_word(inst, chamber_y(chamber, mu), f)
    vinv = fin_inverse(chamber.v)
    k = sum((v - 1) * m for v, m in zip(vinv, mu))
    t = inst.field.gen("t")
    weight = t ** k if k >= 0 else (t ** (-k)).inverse()
    return g.scale(weight)


def nonsym_E_chamber(inst: HeckeInstanceA, lam, chamber: Chamber
                     ) -> EBasisElement:
    """E^C_lambda = U(w)^{-1} E_{w^{-1} lambda} rescaled monic at x^lambda,
    where the chamber is C_0 moved by the finite permutation w.  The result
    is a joint eigenfunction of the chambered translations Y^C."""
    lam = tuple(int(v) for v in lam)
    n = inst.n
    w = chamber.v
    mu = tuple(lam[w[i] - 1] for i in range(n))
    E = nonsym_E_A(inst, mu)
    letters = fin_reduced_word(w)
    sw, _ = chamber_word(Chamber.standard(n), letters, 0)
    g = apply_signed_word(inst, sw.inverse(), E.poly)
    lead = g.coefficient(lam)
    if lead.is_zero():
        raise ChamberNormalizationError(
            f"x^{lam} coefficient of the chamber eigenpolynomial vanishes")
    poly = g.scale(lead.inverse())
    eigenvalues = []
    for i in range(1, n + 1):
        e_i = tuple(int(k == i - 1) for k in range(n))
        h = apply_chamber_y(inst, chamber, e_i, poly)
        ev = h.coefficient(lam)
        assert h == poly.scale(ev), \
            f"chamber eigenfunction fails for Y^C at eps_{i}"
        eigenvalues.append(ev)
    return EBasisElement(lam, poly, tuple(eigenvalues))


def central_sum_check(inst: HeckeInstanceA, lam, chamber: Chamber,
                      degree_bound: int = 1) -> dict:
    """Verify that sum over the permutation orbit of lam of Y^C_mu commutes
    with every T_i and pi, and agrees with the standard-chamber sum, on all
    monomials with exponents in [-degree_bound, degree_bound]^n."""
    lam = tuple(int(v) for v in lam)
    assert sum(lam) == 0, "central sums need a root-lattice weight"
    n = inst.n
    orbit = orbit_a(lam)
    std = Chamber.standard(n)

    def big_op(ch, f):
        total = LaurentPoly.zero(inst.field, n)
        for mu in orbit:
            total = total + apply_chamber_y(inst, ch, mu, f)
        return total

    failures = []
    box = range(-degree_bound, degree_bound + 1)
    for e in itertools.product(box, repeat=n):
        f = LaurentPoly.monomial(inst.field, n, e)
        zf = big_op(chamber, f)
        if zf != big_op(std, f):
            failures.append(("chamber independence", e))
        for i in range(n):
            ti = (lambda h: apply_T0_A(inst, h)) if i == 0 else \
                (lambda h, i=i: apply_Ti_A(inst, i, h))
            if ti(zf) != big_op(chamber, ti(f)):
                failures.append((f"commutes with T_{i}", e))
        if apply_pi(inst, zf) != big_op(chamber, apply_pi(inst, f)):
            failures.append(("commutes with pi", e))
    return {"ok": not failures, "lam": lam, "chamber": chamber.v,
            "failures": failures}


# === independent symmetric oracle ============================================

def _zee(rho) -> int:
    out = 1
    mult = {}
    for part in rho:
        mult[part] = mult.get(part, 0) + 1
    for part, m in mult.items():
        fact = 1
        for k in range(2, m + 1):
            fact *= k
        out *= part ** m * fact
    return out


def gram_schmidt_P(inst: HeckeInstanceA, lam) -> PBasisElement:
    """P_lambda by orthogonalizing monomial symmetric polynomials under
    <p_lam, p_mu> = delta z_lam prod (1 - q^(lam_i))/(1 - t^(lam_i)),
    computed in |lam| auxiliary variables and restricted to n at the end.
    Shares nothing with the Hecke solver; used as a cross-check."""
    lam = tuple(int(v) for v in lam if int(v) != 0)
    assert list(lam) == sorted(lam, reverse=True) and (not lam or lam[-1] > 0)
    field = inst.field
    n = inst.n
    d = sum(lam)
    if d == 0:
        return PBasisElement((0,) * n, LaurentPoly.one(field, n))
    parts = [tuple(p) for p in partitions(d)]

    def p_k(k):
        terms = {}
        for i in range(d):
            e = [0] * d
            e[i] = k
            terms[tuple(e)] = field.one()
        return LaurentPoly(field, d, terms)

    def pad(mu):
        return tuple(list(mu) + [0] * (d - len(mu)))

    # R[rho][mu]: coefficient of m_mu in the power-sum product p_rho.
    R = {}
    for rho in parts:
        prod = LaurentPoly.one(field, d)
        for k in rho:
            prod = prod * p_k(k)
        R[rho] = {mu: prod.coefficient(pad(mu)) for mu in parts}
    order = sorted(parts)
    idx = {mu: i for i, mu in enumerate(order)}
    mat = [[R[rho][mu] for mu in order] for rho in order]
    size = len(order)
    aug = [row + [field.scalar(1 if j == i else 0) for j in range(size)]
           for i, row in enumerate(mat)]
    for col in range(size):
        piv = next(r for r in range(col, size)
                   if not aug[r][col].is_zero())
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [x * inv for x in aug[col]]
        for r in range(size):
            if r != col and not aug[r][col].is_zero():
                fac = aug[r][col]
                aug[r] = [x - fac * y for x, y in zip(aug[r], aug[col])]
    # Minv[rho][mu] solves m = Minv . p  given  p = R . m  =>  Minv = R^{-1},
    # read back from the augmented columns.
    Minv = [[aug[i][size + j] for j in range(size)] for i in range(size)]

    def weight(rho):
        w = field.scalar(_zee(rho))
        for part in rho:
            num = field.one() - field.monomial(inst.qv ** part)
            den = field.one() - field.monomial(inst.tv ** part)
            w = w * (num / den)
        return w

    def inner_mm(mu, kappa):
        total = field.scalar(0)
        for j, rho in enumerate(order):
            total = total + (Minv[idx[mu]][j] * Minv[idx[kappa]][j]
                             * weight(rho))
        return total

    lower = [mu for mu in parts
             if mu != lam and dominance_leq(mu, lam)]
    rows = [[inner_mm(mu, kappa) for mu in lower] for kappa in lower]
    rhs = [-inner_mm(lam, kappa) for kappa in lower]
    coeffs = _solve_unique(rows, rhs) if lower else []

    def m_poly(mu):
        if len(mu) > n:
            return LaurentPoly.zero(field, n)
        terms = {}
        for perm in set(itertools.permutations(list(mu) + [0] * (n - len(mu)))):
            terms[perm] = field.one()
        return LaurentPoly(field, n, terms)

    poly = m_poly(lam)
    for c, mu in zip(coeffs, lower):
        poly = poly + m_poly(mu).scale(c)
    return PBasisElement(tuple(list(lam) + [0] * (n - len(lam))), poly)
