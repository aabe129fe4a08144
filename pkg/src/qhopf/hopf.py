"""Deformed oscillator algebra with its Hopf structure.

The algebra is generated by {1, a, adag, N} subject to

    [N, adag] = adag      [N, a] = -a      [a, adag] = G(N)

with G an exponential-polynomial determined by the parameter pack
(kappa1, kappa2, gamma, G(0)).  Elements are kept in the normal-ordered
basis adag^r f(N) a^s with ExpPoly coefficient functions, which makes
equality a finite termwise test.  On top of the algebra this module carries
the coproduct, counit and antipode with the solved coefficient functions,
the summed structure function F (F(N+1) - F(N) = G(N), F(0) = 0), the
Casimir F(N) - adag*a, and a machine check of every Hopf-algebra axiom.

Three parameter branches are distinguished:

* ``generic``           kappa1 != kappa2 and gamma != 0;
                        G(N) = G(0) sinh(kappa (N+gamma)) / sinh(kappa gamma)
* ``degenerate_kappa``  kappa1 == kappa2; G(N) = G(0) (1 + N/gamma)
* ``gamma_zero``        gamma == 0; G(N) = G'(0) sinh(kappa N)/kappa,
                        collapsing to G'(0) N when kappa == 0 as well

where kappa = kappa1 - kappa2 throughout.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from itertools import product as _cartesian

from .expalg import ExpPoly, antidifference
from .report import CheckReport

__all__ = [
    "BRANCH_TOL",
    "HopfParams",
    "build_params",
    "proposition1_params",
    "g_function",
    "structure_function",
    "structure_function_values",
    "CoproductWeights",
    "AntipodeWeights",
    "coproduct_weights",
    "antipode_weights",
    "AlgebraElement",
    "TensorElement",
    "HopfOscillator",
]

BRANCH_TOL = 1e-12


@dataclass(frozen=True)
class HopfParams:
    """Parameter pack with derived scalars.

    ``g0`` is G(0), except on the gamma_zero branch where it plays G'(0).
    ``x = exp(kappa/2)``, ``y = exp((kappa1+kappa2)/2)`` and ``lambda_sq``
    (populated on the generic branch only) feed the R-matrix series.
    """

    kappa1: complex
    kappa2: complex
    gamma: complex
    g0: complex
    branch: str
    kappa: complex
    x: complex
    y: complex
    lambda_sq: complex | None

    def to_dict(self):
        out = {
            "kappa1": self.kappa1,
            "kappa2": self.kappa2,
            "gamma": self.gamma,
            "g0": self.g0,
            "branch": self.branch,
        }
        if self.lambda_sq is not None:
            out["lambda_sq"] = self.lambda_sq
        return out


def build_params(kappa1, kappa2, gamma, g0=1.0):
    """Validate a parameter pack, detect its branch and derive scalars.

    Near-degenerate inputs are snapped onto the exact branch value
    (kappa2 := kappa1, or gamma := 0) so downstream identities cancel
    exactly instead of leaving ~1e-12 dust.
    """
    kappa1 = complex(kappa1)
    kappa2 = complex(kappa2)
    gamma = complex(gamma)
    g0 = complex(g0)
    if abs(g0) == 0:
        raise ValueError("G(0) must not vanish")
    if abs(gamma) < BRANCH_TOL:
        branch, gamma = "gamma_zero", 0j
        if abs(kappa1 - kappa2) < BRANCH_TOL:
            kappa2 = kappa1
    elif abs(kappa1 - kappa2) < BRANCH_TOL:
        branch, kappa2 = "degenerate_kappa", kappa1
    else:
        branch = "generic"
    kappa = kappa1 - kappa2
    lambda_sq = None
    if branch == "generic":
        s = cmath.sinh(kappa * gamma)
        if abs(s) < 1e-12:
            raise ValueError(
                f"sinh(kappa*gamma) = {s:.3e} vanishes; lambda^2 is undefined")
        lambda_sq = -g0 * cmath.sinh(kappa / 2) / s
    return HopfParams(kappa1, kappa2, gamma, g0, branch, kappa,
                      cmath.exp(kappa / 2), cmath.exp((kappa1 + kappa2) / 2), lambda_sq)


def proposition1_params(xi, gamma1, k=0, g0=1.0, kappa_sum=0.0):
    """Hermitian-family parameters: real xi, gamma = gamma1 + i(2k+1)pi/(2 xi).

    ``kappa_sum`` is the extra parameter kappa1 + kappa2 the coproduct admits
    on top of the q-oscillator presentation (which has kappa1 = -kappa2).
    """
    if xi == 0:
        raise ValueError("xi must be nonzero")
    gamma = complex(gamma1, (2 * k + 1) * math.pi / (2 * xi))
    return build_params((kappa_sum + xi) / 2, (kappa_sum - xi) / 2, gamma, g0)


def g_function(p):
    """The commutator function G(N) as an ExpPoly, per branch."""
    if p.branch == "generic":
        pref = p.g0 / (2 * cmath.sinh(p.kappa * p.gamma))
        plus = ExpPoly(1, {((p.kappa, 0),): pref * cmath.exp(p.kappa * p.gamma)})
        minus = ExpPoly(1, {((-p.kappa, 0),): pref * cmath.exp(-p.kappa * p.gamma)})
        return plus - minus
    if p.branch == "degenerate_kappa":
        return ExpPoly.constant(p.g0) + ExpPoly.variable() * (p.g0 / p.gamma)
    # gamma_zero: g0 is the slope G'(0)
    if abs(p.kappa) < BRANCH_TOL:
        return ExpPoly.variable() * p.g0
    pref = p.g0 / (2 * p.kappa)
    return (ExpPoly(1, {((p.kappa, 0),): pref})
            - ExpPoly(1, {((-p.kappa, 0),): pref}))


def structure_function(p):
    """Closed-form F with F(N+1) - F(N) = G(N) and F(0) = 0."""
    return antidifference(g_function(p))


def structure_function_values(p, n_max):
    """F(0..n_max) by telescoping partial sums of G (independent of the
    closed form)."""
    g = g_function(p)
    vals = [0j]
    for n in range(n_max):
        vals.append(vals[-1] + g(n))
    return vals


@dataclass(frozen=True)
class CoproductWeights:
    """Coefficient functions of the coproduct on the ladder generators:

    coproduct(adag) = adag (x) raise_right + raise_left (x) adag
    coproduct(a)    = a (x) lower_right + lower_left (x) a
    """

    raise_right: ExpPoly
    raise_left: ExpPoly
    lower_right: ExpPoly
    lower_left: ExpPoly

    def named(self):
        return [("raise_right", self.raise_right), ("raise_left", self.raise_left),
                ("lower_right", self.lower_right), ("lower_left", self.lower_left)]


@dataclass(frozen=True)
class AntipodeWeights:
    """S(adag) = -raising(N) adag and S(a) = -lowering(N) a."""

    raising: ExpPoly
    lowering: ExpPoly


def _exp_shifted(mu, offset, extra=0j):
    """exp(mu * (V + offset) + extra) as a one-variable ExpPoly."""
    return ExpPoly(1, {((complex(mu), 0),): cmath.exp(mu * offset + extra)})


def coproduct_weights(p):
    """The solved coproduct coefficients exp(+-kappa_i (N + gamma))."""
    return CoproductWeights(
        raise_right=_exp_shifted(p.kappa1, p.gamma),
        raise_left=_exp_shifted(p.kappa2, p.gamma),
        lower_right=_exp_shifted(-p.kappa2, p.gamma),
        lower_left=_exp_shifted(-p.kappa1, p.gamma),
    )


def antipode_weights(p):
    """The solved antipode coefficients exp(-+(kappa1+kappa2)(N+gamma)+kappa_i)."""
    ks = p.kappa1 + p.kappa2
    return AntipodeWeights(
        raising=_exp_shifted(-ks, p.gamma, extra=p.kappa1),
        lowering=_exp_shifted(ks, p.gamma, extra=p.kappa2),
    )


def _acc(store, key, poly):
    if key in store:
        store[key] = store[key] + poly
    else:
        store[key] = poly


class AlgebraElement:
    """Normal-ordered element: sum over (r, s) of adag^r f_{r,s}(N) a^s."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = {key: f for key, f in terms.items() if not f.is_zero()}

    def _check(self, other):
        if not isinstance(other, AlgebraElement) or other.algebra is not self.algebra:
            raise ValueError("operands must belong to the same algebra")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for key, f in other.terms.items():
            _acc(out, key, f)
        return AlgebraElement(self.algebra, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return AlgebraElement(self.algebra, {k: -f for k, f in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return self.algebra.product(self, other)
        return AlgebraElement(self.algebra, {k: f * other for k, f in self.terms.items()})

    def __rmul__(self, other):
        # scalars only; algebra products go through __mul__
        return AlgebraElement(self.algebra, {k: f * other for k, f in self.terms.items()})

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("powers must be nonnegative integers")
        out = self.algebra.one()
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self):
        return not self.terms

    def residual(self):
        return max((f.rel_residual() for f in self.terms.values()), default=0.0)

    def max_raise(self):
        return max((r for r, _ in self.terms), default=0)

    def max_lower(self):
        return max((s for _, s in self.terms), default=0)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __repr__(self):
        if not self.terms:
            return "AlgebraElement(0)"
        bits = []
        for (r, s), f in sorted(self.terms.items()):
            head = []
            if r:
                head.append("adag" + (f"^{r}" if r > 1 else ""))
            head.append(repr(f))
            if s:
                head.append("a" + (f"^{s}" if s > 1 else ""))
            bits.append(" ".join(head))
        return " + ".join(bits)


class TensorElement:
    """Element of the 2- or 3-fold tensor power in the normal-ordered basis.

    ``terms`` maps a tuple of per-leg (r, s) pairs to an ExpPoly whose
    variable j is the number operator of leg j.  Each canonical ExpPoly term
    factors leg by leg, which is what lets the antipode and multiplication
    maps act legwise.
    """

    __slots__ = ("algebra", "legs", "terms")

    def __init__(self, algebra, legs, terms):
        if legs not in (2, 3):
            raise ValueError("tensor elements have 2 or 3 legs")
        self.algebra = algebra
        self.legs = legs
        self.terms = {key: f for key, f in terms.items() if not f.is_zero()}

    def _check(self, other):
        if (not isinstance(other, TensorElement) or other.algebra is not self.algebra
                or other.legs != self.legs):
            raise ValueError("operands must be tensor elements of the same algebra and legs")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for key, f in other.terms.items():
            _acc(out, key, f)
        return TensorElement(self.algebra, self.legs, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TensorElement(self.algebra, self.legs,
                             {k: -f for k, f in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return self.algebra.tensor_product(self, other)
        return TensorElement(self.algebra, self.legs,
                             {k: f * other for k, f in self.terms.items()})

    __rmul__ = __mul__

    def is_zero(self):
        return not self.terms

    def residual(self):
        return max((f.rel_residual() for f in self.terms.values()), default=0.0)

    def degrees(self):
        """Set of total level shifts sum_i (r_i - s_i) over the terms."""
        return {sum(r - s for r, s in key) for key in self.terms}

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __repr__(self):
        return f"TensorElement(legs={self.legs}, terms={len(self.terms)})"


class HopfOscillator:
    """The algebra together with its Hopf maps.

    The keyword hooks replace the solved coefficient functions; they exist
    for the negative-control checks (a tampered counit point, a commutator
    function that violates the compatibility conditions) and default to the
    solved forms.
    """

    def __init__(self, params, *, g=None, weights=None, antipode_pair=None,
                 counit_point=None):
        self.params = params
        self.g = g if g is not None else g_function(params)
        self.weights = weights if weights is not None else coproduct_weights(params)
        self.antipode_pair = (antipode_pair if antipode_pair is not None
                              else antipode_weights(params))
        self.counit_point = (complex(counit_point) if counit_point is not None
                             else -params.gamma)
        self._ladder_sums = {}
        self._structure = None

    # ------------------------------------------------------------------ build
    def scalar(self, value):
        return AlgebraElement(self, {(0, 0): ExpPoly.constant(value)})

    def one(self):
        return self.scalar(1.0)

    def lowering(self):
        return AlgebraElement(self, {(0, 1): ExpPoly.constant(1.0)})

    def raising(self):
        return AlgebraElement(self, {(1, 0): ExpPoly.constant(1.0)})

    def number_op(self):
        return AlgebraElement(self, {(0, 0): ExpPoly.variable()})

    def from_function(self, f):
        if f.arity != 1:
            raise ValueError("diagonal functions are one-variable")
        return AlgebraElement(self, {(0, 0): f})

    def monomial(self, r, s, f=None):
        return AlgebraElement(self, {(int(r), int(s)):
                                     f if f is not None else ExpPoly.constant(1.0)})

    @property
    def structure_poly(self):
        if self._structure is None:
            self._structure = antidifference(self.g)
        return self._structure

    def casimir(self):
        return self.from_function(self.structure_poly) - self.monomial(1, 1)

    # ---------------------------------------------------------------- product
    def _ladder_sum(self, s):
        # sum_{j=0}^{s-1} G(N+j): picked up when a^s crosses adag
        if s not in self._ladder_sums:
            total = ExpPoly.zero(1)
            for j in range(s):
                total = total + self.g.shift(j)
            self._ladder_sums[s] = total
        return self._ladder_sums[s]

    def _times_raising(self, terms):
        out = {}
        for (r, s), f in terms.items():
            if s == 0:
                _acc(out, (r + 1, 0), f.shift(1))
            else:
                _acc(out, (r + 1, s), f.shift(1))
                _acc(out, (r, s - 1), f * self._ladder_sum(s))
        return out

    def _times_lowering(self, terms):
        out = {}
        for (r, s), f in terms.items():
            _acc(out, (r, s + 1), f)
        return out

    def _times_function(self, terms, g):
        out = {}
        for (r, s), f in terms.items():
            _acc(out, (r, s), f * g.shift(s))
        return out

    def product(self, x, y):
        """Normal-ordered product; associative and bilinear."""
        x._check(y)
        out = {}
        for (r2, s2), g in y.terms.items():
            cur = x.terms
            for _ in range(r2):
                cur = self._times_raising(cur)
            cur = self._times_function(cur, g)
            for _ in range(s2):
                cur = self._times_lowering(cur)
            for key, f in cur.items():
                _acc(out, key, f)
        return AlgebraElement(self, out)

    def commutator(self, x, y):
        return x * y - y * x

    # ----------------------------------------------------------------- tensor
    def tensor_join(self, *factors):
        """Tensor product of algebra elements (and/or tensor elements)."""
        legs = sum(1 if isinstance(f, AlgebraElement) else f.legs for f in factors)
        if legs not in (2, 3):
            raise ValueError("tensor products carry 2 or 3 legs")
        out = {(): ExpPoly.constant(1.0, legs)}
        offset = 0
        for fac in factors:
            width = 1 if isinstance(fac, AlgebraElement) else fac.legs
            fac_terms = ({((key),): poly for key, poly in fac.terms.items()}
                         if isinstance(fac, AlgebraElement) else fac.terms)
            nxt = {}
            for key0, poly0 in out.items():
                for key1, poly1 in fac_terms.items():
                    if isinstance(fac, AlgebraElement):
                        lifted = poly1.embed(legs, offset)
                    else:
                        mapping = [({offset + j: 1.0}, 0j) for j in range(width)]
                        lifted = poly1.substitute(mapping, legs)
                    _acc(nxt, key0 + key1, poly0 * lifted)
            out = nxt
            offset += width
        return TensorElement(self, legs, out)

    def tensor_one(self, legs=2):
        key = ((0, 0),) * legs
        return TensorElement(self, legs, {key: ExpPoly.constant(1.0, legs)})

    def _leg_monomial(self, rs, piece):
        """One separable leg factor as a standalone algebra element."""
        return AlgebraElement(self, {rs: ExpPoly(1, {(piece,): 1.0 + 0j})})

    def tensor_product(self, t, u):
        """Componentwise product (x1 (x) x2) (y1 (x) y2) = x1 y1 (x) x2 y2,
        evaluated term by term through the leg separability of the canonical
        coefficient form."""
        t._check(u)
        legs = t.legs
        out = {}
        for key1, p1 in t.terms.items():
            for pk1, c1 in p1.terms.items():
                for key2, p2 in u.terms.items():
                    for pk2, c2 in p2.terms.items():
                        leg_results = []
                        for i in range(legs):
                            prod = self.product(self._leg_monomial(key1[i], pk1[i]),
                                                self._leg_monomial(key2[i], pk2[i]))
                            leg_results.append(list(prod.terms.items()))
                        for combo in _cartesian(*leg_results):
                            nk = tuple(k for k, _ in combo)
                            poly = ExpPoly.constant(c1 * c2, legs)
                            for i, (_, fp) in enumerate(combo):
                                poly = poly * fp.embed(legs, i)
                            _acc(out, nk, poly)
        return TensorElement(self, legs, out)

    def _tensor_power(self, t, n):
        out = self.tensor_one(t.legs)
        for _ in range(n):
            out = self.tensor_product(out, t)
        return out

    # -------------------------------------------------------------- coproduct
    def _coproduct_of_function(self, f):
        # f(N) -> f(N1 + N2 + gamma)
        return f.substitute([({0: 1.0, 1: 1.0}, self.params.gamma)], 2)

    def coproduct(self, x):
        """Algebra homomorphism determined by its action on the generators."""
        w = self.weights
        d_raise = TensorElement(self, 2, {
            ((1, 0), (0, 0)): w.raise_right.embed(2, 1),
            ((0, 0), (1, 0)): w.raise_left.embed(2, 0),
        })
        d_lower = TensorElement(self, 2, {
            ((0, 1), (0, 0)): w.lower_right.embed(2, 1),
            ((0, 0), (0, 1)): w.lower_left.embed(2, 0),
        })
        total = TensorElement(self, 2, {})
        for (r, s), f in x.terms.items():
            cur = TensorElement(self, 2, {((0, 0), (0, 0)): self._coproduct_of_function(f)})
            cur = self.tensor_product(self._tensor_power(d_raise, r), cur)
            cur = self.tensor_product(cur, self._tensor_power(d_lower, s))
            total = total + cur
        return total

    def coproduct_on_leg(self, t, leg):
        """Apply the coproduct to one leg of a tensor element (legs -> legs+1)."""
        legs = t.legs
        out = {}
        for key, poly in t.terms.items():
            for pk, c in poly.terms.items():
                dm = self.coproduct(self._leg_monomial(key[leg], pk[leg]))
                for dkey, dpoly in dm.terms.items():
                    nk = key[:leg] + dkey + key[leg + 1:]
                    lifted = dpoly.substitute([({leg: 1.0}, 0j), ({leg + 1: 1.0}, 0j)],
                                              legs + 1) * c
                    for i in range(legs):
                        if i == leg:
                            continue
                        pos = i if i < leg else i + 1
                        lifted = lifted * ExpPoly(1, {(pk[i],): 1.0 + 0j}).embed(legs + 1, pos)
                    _acc(out, nk, lifted)
        return TensorElement(self, legs + 1, out)

    # ----------------------------------------------------------------- counit
    def counit(self, x):
        """Character: adag^r f(N) a^s -> f(-gamma) if r = s = 0, else 0."""
        cp = self.counit_point
        total = 0j
        f = x.terms.get((0, 0))
        if f is not None:
            total = f(cp)
        return total

    def counit_on_leg(self, t, leg):
        """Contract one leg with the counit (legs -> legs-1)."""
        legs = t.legs
        cp = self.counit_point
        out = {}
        for key, poly in t.terms.items():
            if key[leg] != (0, 0):
                continue
            for pk, c in poly.terms.items():
                mu, k = pk[leg]
                w = c * cmath.exp(mu * cp) * cp**k
                nk = key[:leg] + key[leg + 1:]
                npk = pk[:leg] + pk[leg + 1:]
                _acc(out, nk, ExpPoly(legs - 1, {npk: w}, scale=poly.scale))
        if legs - 1 == 1:
            # 1-leg keys are 1-tuples of (r, s); unwrap to algebra terms
            return AlgebraElement(self, {key[0]: poly for key, poly in out.items()})
        return TensorElement(self, legs - 1, out)

    # --------------------------------------------------------------- antipode
    def _antipode_of_function(self, f):
        # f(N) -> f(-N - 2 gamma)
        return f.substitute([({0: -1.0}, -2 * self.params.gamma)], 1)

    def antipode(self, x):
        """Antihomomorphism: S(adag^r f(N) a^s) = S(a)^s S(f(N)) S(adag)^r."""
        aw = self.antipode_pair
        # S(adag) = -raising(N) adag = adag * (-raising(N+1)) in normal order
        s_raise = AlgebraElement(self, {(1, 0): -(aw.raising.shift(1))})
        s_lower = AlgebraElement(self, {(0, 1): -aw.lowering})
        total = AlgebraElement(self, {})
        for (r, s), f in x.terms.items():
            term = (s_lower**s) * self.from_function(self._antipode_of_function(f)) \
                * (s_raise**r)
            total = total + term
        return total

    def antipode_on_leg(self, t, leg):
        """Apply the antipode inside one leg of a tensor element."""
        legs = t.legs
        out = {}
        for key, poly in t.terms.items():
            for pk, c in poly.terms.items():
                sm = self.antipode(self._leg_monomial(key[leg], pk[leg]))
                for skey, spoly in sm.terms.items():
                    nk = key[:leg] + (skey,) + key[leg + 1:]
                    lifted = spoly.embed(legs, leg) * c
                    for i in range(legs):
                        if i == leg:
                            continue
                        lifted = lifted * ExpPoly(1, {(pk[i],): 1.0 + 0j}).embed(legs, i)
                    _acc(out, nk, lifted)
        return TensorElement(self, legs, out)

    # ------------------------------------------------------------- structure
    def multiply_legs(self, t):
        """Multiplication map on a 2-leg tensor element: x (x) y -> x*y."""
        if t.legs != 2:
            raise ValueError("multiply_legs expects a 2-leg tensor element")
        total = AlgebraElement(self, {})
        for key, poly in t.terms.items():
            for pk, c in poly.terms.items():
                m1 = AlgebraElement(self, {key[0]: ExpPoly(1, {(pk[0],): complex(c)},
                                                           scale=poly.scale)})
                m2 = self._leg_monomial(key[1], pk[1])
                total = total + self.product(m1, m2)
        return total

    def twist(self, t):
        """Swap the two legs: x (x) y -> y (x) x."""
        if t.legs != 2:
            raise ValueError("twist expects a 2-leg tensor element")
        swap = [({1: 1.0}, 0j), ({0: 1.0}, 0j)]
        return TensorElement(self, 2, {
            (key[1], key[0]): poly.substitute(swap, 2) for key, poly in t.terms.items()})

    # ------------------------------------------------------------------ checks
    def _report_element(self, rep, name, diff, tol):
        residual = diff.residual()
        ok = diff.is_zero() and residual <= tol
        witness = None if ok else repr(diff)[:160]
        rep.add(name, ok, residual, witness)

    def _report_scalar(self, rep, name, value, reference, tol):
        residual = abs(value - reference) / max(1.0, abs(reference))
        rep.add(name, residual <= tol, residual,
                None if residual <= tol else f"{value} != {reference}")

    def check_axioms(self, tol=1e-12, monomial_guards=True):
        """Symbolic verification of the Hopf-algebra axioms.

        Covers coassociativity, both counit identities, both antipode
        identities, compatibility of coproduct/counit with the three defining
        commutators, the difference equation of the structure function and
        centrality of the Casimir.  Generator-level checks suffice because
        the maps extend (anti)homomorphically; the monomial guards exercise
        that extension code on composite elements.
        """
        rep = CheckReport(params=self.params.to_dict())
        probes = [("a", self.lowering()), ("adag", self.raising()), ("N", self.number_op())]
        if monomial_guards:
            probes += [
                ("adag^2 e^{0.3N} a", self.monomial(2, 1, ExpPoly.exponential(0.3))),
                ("adag N e^{-0.2N} a^2",
                 self.monomial(1, 2, ExpPoly.variable() * ExpPoly.exponential(-0.2))),
                ("N^2", self.monomial(0, 0, ExpPoly.variable()**2)),
            ]
        for name, x in probes:
            d = self.coproduct(x)
            self._report_element(rep, f"coassociativity[{name}]",
                                 self.coproduct_on_leg(d, 0) - self.coproduct_on_leg(d, 1),
                                 tol)
            self._report_element(rep, f"counit-left[{name}]",
                                 self.counit_on_leg(d, 0) - x, tol)
            self._report_element(rep, f"counit-right[{name}]",
                                 self.counit_on_leg(d, 1) - x, tol)
            eps_x = self.counit(x)
            self._report_element(rep, f"antipode-left[{name}]",
                                 self.multiply_legs(self.antipode_on_leg(d, 0))
                                 - self.scalar(eps_x), tol)
            self._report_element(rep, f"antipode-right[{name}]",
                                 self.multiply_legs(self.antipode_on_leg(d, 1))
                                 - self.scalar(eps_x), tol)

        # compatibility with the defining relations
        da = self.coproduct(self.lowering())
        dad = self.coproduct(self.raising())
        dn = self.coproduct(self.number_op())
        dg = self.coproduct(self.from_function(self.g))
        self._report_element(rep, "coproduct-commutator[a,adag]",
                             self.tensor_product(da, dad) - self.tensor_product(dad, da)
                             - dg, tol)
        self._report_element(rep, "coproduct-commutator[N,adag]",
                             self.tensor_product(dn, dad) - self.tensor_product(dad, dn)
                             - dad, tol)
        self._report_element(rep, "coproduct-commutator[N,a]",
                             self.tensor_product(dn, da) - self.tensor_product(da, dn)
                             + da, tol)
        self._report_scalar(rep, "counit-commutator[a,adag]", 0j, self.g(self.counit_point),
                            tol)
        self._report_scalar(rep, "counit-commutator[N,adag]", 0j,
                            self.counit(self.raising()), tol)
        self._report_scalar(rep, "counit-commutator[N,a]", 0j,
                            self.counit(self.lowering()), tol)

        if monomial_guards:
            x = self.monomial(1, 1, ExpPoly.exponential(0.25))
            y = self.monomial(0, 2, ExpPoly.variable())
            self._report_element(rep, "coproduct-homomorphism[guard]",
                                 self.coproduct(x * y)
                                 - self.tensor_product(self.coproduct(x), self.coproduct(y)),
                                 tol)

        f = self.structure_poly
        self._report_element(rep, "structure-difference-equation",
                             self.from_function(f.shift(1) - f - self.g), tol)
        c = self.casimir()
        for name, x in [("a", self.lowering()), ("adag", self.raising()),
                        ("N", self.number_op())]:
            self._report_element(rep, f"casimir-central[{name}]", c * x - x * c, tol)
        return rep
