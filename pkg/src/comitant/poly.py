"""Sparse multivariate polynomials with exact coefficients.

A Poly is a mapping from exponent vectors (one entry per declared variable)
to nonzero scalars, over a fixed coefficient ring (QQ or GF(p)).  Values are
immutable by convention: every operation returns a fresh Poly.  Display order
is graded lexicographic in the declared variable order, so printing is
deterministic and byte-reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd

from .scalars import QQ, Fp, RingMismatchError, as_scalar, ring_of, ring_one, ring_zero


class Poly:
    __slots__ = ("vars", "ring", "terms")

    def __init__(self, vars: tuple, terms: dict, ring: tuple = QQ):
        self.vars = tuple(vars)
        self.ring = ring
        self.terms = terms  # exponent tuple -> nonzero scalar

    # -- construction -------------------------------------------------

    @classmethod
    def zero(cls, vars, ring=QQ) -> "Poly":
        return cls(tuple(vars), {}, ring)

    @classmethod
    def constant(cls, c, vars, ring=QQ) -> "Poly":
        c = as_scalar(c, ring)
        vars = tuple(vars)
        if not c:
            return cls(vars, {}, ring)
        return cls(vars, {(0,) * len(vars): c}, ring)

    @classmethod
    def variable(cls, name: str, vars, ring=QQ) -> "Poly":
        vars = tuple(vars)
        i = vars.index(name)
        e = [0] * len(vars)
        e[i] = 1
        return cls(vars, {tuple(e): ring_one(ring)}, ring)

    @classmethod
    def monomial(cls, c, exps, vars, ring=QQ) -> "Poly":
        c = as_scalar(c, ring)
        vars = tuple(vars)
        if len(exps) != len(vars):
            raise ValueError("exponent vector length does not match variables")
        if not c:
            return cls(vars, {}, ring)
        return cls(vars, {tuple(exps): c}, ring)

    # -- bookkeeping ---------------------------------------------------

    def _compat(self, other: "Poly") -> None:
        if self.vars != other.vars:
            raise RingMismatchError(
                f"variable mismatch: {self.vars} vs {other.vars}")
        if self.ring != other.ring:
            raise RingMismatchError(
                f"coefficient ring mismatch: {self.ring} vs {other.ring}")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, indices) -> int:
        """Max combined exponent over the given variable positions (-1 if zero)."""
        if not self.terms:
            return -1
        return max(sum(e[i] for i in indices) for e in self.terms)

    def is_homogeneous(self, indices=None) -> bool:
        """Homogeneous in the given variable subset (all variables by default)."""
        if not self.terms:
            return True
        if indices is None:
            degs = {sum(e) for e in self.terms}
        else:
            degs = {sum(e[i] for i in indices) for e in self.terms}
        return len(degs) == 1

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return (self.vars == other.vars and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.vars, self.ring, frozenset(self.terms.items())))

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Fp)):
            other = Poly.constant(other, self.vars, self.ring)
        self._compat(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            if s is None:
                terms[e] = c
            else:
                s = s + c
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return Poly(self.vars, terms, self.ring)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.vars, {e: -c for e, c in self.terms.items()}, self.ring)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Fp)):
            other = Poly.constant(other, self.vars, self.ring)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Fp)):
            c = as_scalar(other, self.ring)
            if not c:
                return Poly.zero(self.vars, self.ring)
            return Poly(self.vars,
                        {e: v * c for e, v in self.terms.items()}, self.ring)
        self._compat(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = out.get(e)
                if s is None:
                    if c:
                        out[e] = c
                else:
                    s = s + c
                    if s:
                        out[e] = s
                    else:
                        del out[e]
        return Poly(self.vars, out, self.ring)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.constant(1, self.vars, self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def scale_div(self, c) -> "Poly":
        """Exact division by a nonzero scalar."""
        c = as_scalar(c, self.ring)
        if not c:
            raise ZeroDivisionError("division of polynomial by zero scalar")
        if self.ring == QQ:
            inv = Fraction(1) / c
        else:
            inv = c.inverse()
        return self * inv

    # -- calculus and substitution --------------------------------------

    def partial(self, var_index: int) -> "Poly":
        """Formal partial derivative with respect to variable var_index."""
        out = {}
        for e, c in self.terms.items():
            k = e[var_index]
            if k == 0:
                continue
            c2 = c * k
            if not c2:
                continue  # characteristic divides the exponent
            e2 = list(e)
            e2[var_index] = k - 1
            out[tuple(e2)] = c2
        return Poly(self.vars, out, self.ring)

    def substitute(self, images: list) -> "Poly":
        """Substitute images[i] for variable i; all images share one ring.

        The result lives in the images' variable set, so this also performs
        ring/variable migration.
        """
        if len(images) != len(self.vars):
            raise ValueError(
                f"need {len(self.vars)} images, got {len(images)}")
        tvars, tring = images[0].vars, images[0].ring
        for im in images:
            if im.vars != tvars or im.ring != tring:
                raise RingMismatchError("substitution images disagree on ring")
        pow_cache: dict = {}

        def power(i, k):
            key = (i, k)
            got = pow_cache.get(key)
            if got is None:
                got = images[i] ** k
                pow_cache[key] = got
            return got

        acc = Poly.zero(tvars, tring)
        for e, c in self.terms.items():
            if self.ring == QQ and tring != QQ:
                c = as_scalar(c.numerator, tring) / c.denominator
            term = Poly.constant(c, tvars, tring)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            acc = acc + term
        return acc

    def rename_vars(self, new_vars) -> "Poly":
        new_vars = tuple(new_vars)
        if len(new_vars) != len(self.vars):
            raise ValueError("variable count mismatch")
        return Poly(new_vars, dict(self.terms), self.ring)

    def extend_to(self, vars) -> "Poly":
        """View this polynomial inside a larger variable list (superset)."""
        vars = tuple(vars)
        pos = [vars.index(v) for v in self.vars]
        n = len(vars)
        out = {}
        for e, c in self.terms.items():
            e2 = [0] * n
            for i, k in enumerate(e):
                e2[pos[i]] = k
            out[tuple(e2)] = c
        return Poly(vars, out, self.ring)

    def evaluate(self, values: list):
        """Full evaluation at scalars (one value per variable)."""
        if len(values) != len(self.vars):
            raise ValueError("value count mismatch")
        values = [as_scalar(v, self.ring) for v in values]
        acc = ring_zero(self.ring)
        for e, c in self.terms.items():
            t = c
            for v, k in zip(values, e):
                if k:
                    t = t * v ** k
            acc = acc + t
        return acc

    def to_ring(self, ring: tuple) -> "Poly":
        """Map coefficients into another ring (QQ -> GF(p) reduction)."""
        if ring == self.ring:
            return self
        if self.ring != QQ:
            raise RingMismatchError("only QQ -> GF(p) reduction is supported")
        from .scalars import rational_to_fp
        p = ring[1]
        out = {}
        for e, c in self.terms.items():
            v = rational_to_fp(c, p)
            if v:
                out[e] = v
        return Poly(self.vars, out, ring)

    # -- coefficient extraction -----------------------------------------

    def coefficients_in(self, indices) -> dict:
        """Collect as a polynomial in the listed variables.

        Returns {exponent-tuple-over-indices: Poly in the remaining
        variables}.  The remaining variables keep their order.
        """
        indices = list(indices)
        rest = [i for i in range(len(self.vars)) if i not in indices]
        rest_vars = tuple(self.vars[i] for i in rest)
        groups: dict = {}
        for e, c in self.terms.items():
            key = tuple(e[i] for i in indices)
            sub = tuple(e[i] for i in rest)
            groups.setdefault(key, {})[sub] = c
        return {k: Poly(rest_vars, t, self.ring) for k, t in groups.items()}

    def coefficient(self, exps_by_index: dict) -> "Poly":
        """Coefficient of prod(var_i^e_i) as a Poly in the other variables."""
        indices = sorted(exps_by_index)
        want = tuple(exps_by_index[i] for i in indices)
        return self.coefficients_in(indices).get(
            want,
            Poly.zero(tuple(v for i, v in enumerate(self.vars)
                            if i not in exps_by_index), self.ring))

    # -- normalization ---------------------------------------------------

    def content(self) -> Fraction:
        """Positive rational c with self/c integral and primitive (QQ only)."""
        if self.ring != QQ:
            raise RingMismatchError("content is defined over QQ")
        if not self.terms:
            return Fraction(1)
        num = 0
        den = 1
        for c in self.terms.values():
            num = _int_gcd(num, c.numerator)
            den = den * c.denominator // _int_gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> "Poly":
        """Scale to integer coefficients with gcd 1 and positive leading term."""
        if not self.terms:
            return self
        q = self.scale_div(self.content())
        lead = q.terms[max(q.terms, key=_order_key)]
        if self.ring == QQ and lead < 0:
            q = -q
        return q

    def lead_term(self):
        """(exponent, coefficient) that is maximal in graded lex order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=_order_key)
        return e, self.terms[e]

    # -- display ----------------------------------------------------------

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: _order_key(t[0]),
                      reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for name, k in zip(self.vars, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            if self.ring == QQ:
                neg = c < 0
                mag = -c if neg else c
                coeff_str = str(mag)
                body = "*".join(([coeff_str] if mag != 1 or not factors else [])
                                + factors)
            else:
                neg = False
                body = "*".join(([str(c)] if c.val != 1 or not factors else [])
                                + factors)
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Poly({str(self)!r}, vars={self.vars})"


def _order_key(e: tuple):
    """Graded lex: compare total degree, then the exponent tuple itself."""
    return (sum(e), e)


# -- ring constructors ----------------------------------------------------

def poly_ring(names, ring=QQ):
    """Generators of a polynomial ring: poly_ring("x,y") -> (x, y)."""
    if isinstance(names, str):
        names = tuple(n.strip() for n in names.split(","))
    else:
        names = tuple(names)
    return tuple(Poly.variable(n, names, ring) for n in names)


# -- exact division and gcd ------------------------------------------------

def divexact(p: Poly, d: Poly) -> Poly:
    """Exact multivariate division; raises ValueError if d does not divide p."""
    p._compat(d)
    if d.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    de, dc = d.lead_term()
    rem = p
    out: dict = {}
    while rem.terms:
        re, rc = rem.lead_term()
        qe = tuple(a - b for a, b in zip(re, de))
        if any(k < 0 for k in qe):
            raise ValueError("inexact polynomial division")
        qc = rc / dc
        out[qe] = qc
        rem = rem - Poly.monomial(qc, qe, p.vars, p.ring) * d
    return Poly(p.vars, out, p.ring)


def _strip_var_powers(p: Poly):
    """Factor out the largest monomial dividing p; returns (exps, cofactor)."""
    n = len(p.vars)
    mins = [min(e[i] for e in p.terms) for i in range(n)]
    if not any(mins):
        return tuple(mins), p
    out = {tuple(a - b for a, b in zip(e, mins)): c for e, c in p.terms.items()}
    return tuple(mins), Poly(p.vars, out, p.ring)


def univariate_gcd(p: Poly, q: Poly) -> Poly:
    """Gcd of two effectively-univariate polynomials.

    Binary homogeneous forms are handled by stripping shared variable powers
    and running the Euclidean algorithm on the dehomogenization.  The result
    is primitive-integer over QQ and monic over a prime field.
    """
    p._compat(q)
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if p.is_zero():
        return _gcd_normalize(q)
    if q.is_zero():
        return _gcd_normalize(p)
    used = sorted({i for e in list(p.terms) + list(q.terms)
                   for i, k in enumerate(e) if k})
    if len(used) > 2:
        raise ValueError("gcd supports at most two active variables")
    pm, p1 = _strip_var_powers(p)
    qm, q1 = _strip_var_powers(q)
    shared = tuple(min(a, b) for a, b in zip(pm, qm))
    if len(used) <= 1:
        core = Poly.constant(1, p.vars, p.ring)
        if used:
            i = used[0]
            u = _to_univariate(p1, i)
            v = _to_univariate(q1, i)
            g = _euclid(u, v, p.ring)
            core = _from_univariate(g, i, len(p.vars), p.vars, p.ring,
                                    homogenize_at=None)
    else:
        i, j = used
        u = _dehomogenize(p1, i, j)
        v = _dehomogenize(q1, i, j)
        g = _euclid(u, v, p.ring)
        core = _from_univariate(g, i, len(p.vars), p.vars, p.ring,
                                homogenize_at=j)
    mono = Poly.monomial(1, shared, p.vars, p.ring)
    return _gcd_normalize(mono * core)


def _gcd_normalize(p: Poly) -> Poly:
    if p.ring == QQ:
        return p.primitive()
    _, lc = p.lead_term()
    return p.scale_div(lc)


def _to_univariate(p: Poly, i: int) -> list:
    d = max(e[i] for e in p.terms)
    out = [ring_zero(p.ring)] * (d + 1)
    for e, c in p.terms.items():
        out[e[i]] = c
    return out


def _dehomogenize(p: Poly, i: int, j: int) -> list:
    """Coefficient list of p(x, 1) where x is variable i and 1 replaces j."""
    d = max(e[i] for e in p.terms)
    out = [ring_zero(p.ring)] * (d + 1)
    for e, c in p.terms.items():
        out[e[i]] = out[e[i]] + c
    return out


def _from_univariate(coeffs, i, n, vars, ring, homogenize_at):
    deg = len(coeffs) - 1
    terms = {}
    for k, c in enumerate(coeffs):
        if not c:
            continue
        e = [0] * n
        e[i] = k
        if homogenize_at is not None:
            e[homogenize_at] = deg - k
        terms[tuple(e)] = c
    return Poly(tuple(vars), terms, ring)


def _trim(u):
    while u and not u[-1]:
        u.pop()
    return u


def _euclid(u: list, v: list, ring) -> list:
    """Euclidean gcd of univariate coefficient lists over a field."""
    u = _trim(list(u))
    v = _trim(list(v))
    while v:
        inv = (Fraction(1) / v[-1]) if ring == QQ else v[-1].inverse()
        r = list(u)
        dv = len(v) - 1
        while r and len(r) - 1 >= dv:
            f = r[-1] * inv
            shift = len(r) - 1 - dv
            for k in range(len(v)):
                r[shift + k] = r[shift + k] - f * v[k]
            _trim(r)
        u, v = v, r
    if not u:
        return [ring_one(ring)]
    return u


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out
