"""Based quantum tori and quantum seed mutation.

Convention: the torus of a skew integer matrix ``Lambda`` has
``Z[q, q^-1]``-basis ``X^a`` (``a`` in ``Z^m``) with

    X^a X^b = q^beta(a, b) X^(a+b),    beta(a, b) = a^T Lambda b,

hence ``X^a X^b = q^(2 beta(a, b)) X^b X^a``.  In particular the generators
satisfy ``X_i X_j = q^(2 lambda_ij) X_j X_i``: our ``q`` is the square root
of the ``q`` used when the commutation relation is written with exponent
``lambda_ij``.  :func:`check_q_commute` takes the value of the form
(``lambda_ij``) as its expected exponent.

Cluster variables of mutated seeds are kept as elements of the torus of the
*initial* seed.  Mutation divides by the old variable; this is performed as
exact left division in the torus and fails loudly if the quotient is not a
torus element.
"""

from dataclasses import dataclass

from .errors import DimensionError, IncompatibleError, TorusMismatchError
from .exchange import ExchangeMatrix, mutate_matrix
from .linalg import Matrix
from .quantizer import CompatiblePair, check_compatible

__all__ = [
    "LaurentQ",
    "QuantumSeed",
    "QuantumTorus",
    "QuantumTorusElement",
    "check_q_commute",
    "commutation_exponent",
    "initial_seed",
    "mutate_lambda",
    "mutate_seed",
    "normal_order",
    "torus_mul",
]


class LaurentQ:
    """Laurent polynomial in ``q`` with integer coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif isinstance(coeffs, int):
            coeffs = {0: coeffs}
        self._c = {int(e): int(c) for e, c in dict(coeffs).items() if c != 0}

    @classmethod
    def q(cls, power=1, coeff=1):
        return cls({power: coeff})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, LaurentQ):
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return cls(x)
        raise TypeError(f"cannot use {type(x).__name__} as a Z[q, 1/q] scalar")

    @property
    def coeffs(self):
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def __bool__(self):
        return bool(self._c)

    def is_monomial(self):
        return len(self._c) == 1

    def degree(self):
        return max(self._c)

    def valuation(self):
        return min(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentQ(other)
        if not isinstance(other, LaurentQ):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        other = LaurentQ.coerce(other)
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return LaurentQ(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentQ({e: -c for e, c in self._c.items()})

    def __sub__(self, other):
        return self + (-LaurentQ.coerce(other))

    def __rsub__(self, other):
        return LaurentQ.coerce(other) - self

    def __mul__(self, other):
        other = LaurentQ.coerce(other)
        out = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentQ(out)

    __rmul__ = __mul__

    def shift(self, power):
        """Multiply by ``q^power``."""
        return LaurentQ({e + power: c for e, c in self._c.items()})

    def exact_div(self, other):
        """Quotient ``self / other`` in ``Z[q, 1/q]``; ``ValueError`` if inexact."""
        other = LaurentQ.coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        rem = self
        quot = {}
        lo_bound = self.valuation() - other.valuation() if self else 0
        lead_e, lead_c = other.degree(), other._c[other.degree()]
        while rem:
            e = rem.degree() - lead_e
            c, r = divmod(rem._c[rem.degree()], lead_c)
            if r or e < lo_bound:
                raise ValueError(f"{self} is not divisible by {other}")
            quot[e] = c
            rem = rem - other * LaurentQ({e: c})
        return LaurentQ(quot)

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e, c in sorted(self._c.items(), reverse=True):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                qq = "q" if e == 1 else f"q^{e}"
                body = qq if mag == 1 else f"{mag}*{qq}"
            parts.append(("-" if c < 0 else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for s, body in parts[1:]:
            text += f" {s} {body}"
        return text

    def __repr__(self):
        return f"LaurentQ({self.items()!r})"


class QuantumTorus:
    """Based quantum torus of a skew-symmetric integer matrix ``Lambda``."""

    def __init__(self, lambda_):
        lam = lambda_ if isinstance(lambda_, Matrix) else Matrix(lambda_)
        if not (lam.is_integral() and lam.is_skew_symmetric()):
            raise ValueError("Lambda must be a skew-symmetric integer matrix")
        self.lambda_ = lam
        self.m = lam.rows

    def __eq__(self, other):
        return isinstance(other, QuantumTorus) and self.lambda_ == other.lambda_

    def __hash__(self):
        return hash(self.lambda_)

    def __repr__(self):
        return f"QuantumTorus({self.lambda_.tolist()!r})"

    def beta(self, a, b):
        lam = self.lambda_
        return sum(a[i] * lam[i, j] * b[j] for i in range(self.m) if a[i] for j in range(self.m) if b[j])

    def monomial(self, a, coeff=1):
        a = tuple(int(x) for x in a)
        if len(a) != self.m:
            raise DimensionError(f"exponent vector of length {len(a)} in a rank-{self.m} torus")
        return QuantumTorusElement(self, {a: LaurentQ.coerce(coeff)})

    def gen(self, i):
        return self.monomial([int(k == i) for k in range(self.m)])

    def one(self):
        return self.monomial([0] * self.m)

    def zero(self):
        return QuantumTorusElement(self, {})


class QuantumTorusElement:
    """Finite sum of ``c_a(q) X^a``; immutable."""

    __slots__ = ("torus", "_terms")

    def __init__(self, torus, terms):
        self.torus = torus
        self._terms = {tuple(a): LaurentQ.coerce(c) for a, c in dict(terms).items() if c}
        if any(len(a) != torus.m for a in self._terms):
            raise DimensionError("exponent vector length does not match the torus")

    @property
    def terms(self):
        return dict(self._terms)

    def support(self):
        return sorted(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def _check(self, other):
        if not isinstance(other, QuantumTorusElement):
            return NotImplemented
        if other.torus is not self.torus and other.torus != self.torus:
            raise TorusMismatchError("elements belong to different quantum tori")
        return other

    def __eq__(self, other):
        if not isinstance(other, QuantumTorusElement):
            return NotImplemented
        return self.torus == other.torus and self._terms == other._terms

    def __hash__(self):
        return hash((self.torus, frozenset(self._terms.items())))

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for a, c in other._terms.items():
            out[a] = out[a] + c if a in out else c
        return QuantumTorusElement(self.torus, out)

    def __neg__(self):
        return QuantumTorusElement(self.torus, {a: -c for a, c in self._terms.items()})

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        c = LaurentQ.coerce(c)
        return QuantumTorusElement(self.torus, {a: c * v for a, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, LaurentQ)) and not isinstance(other, bool):
            return self.scale(other)
        if self._check(other) is NotImplemented:
            return NotImplemented
        beta = self.torus.beta
        out = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                s = tuple(x + y for x, y in zip(a, b))
                term = (ca * cb).shift(beta(a, b))
                out[s] = out[s] + term if s in out else term
        return QuantumTorusElement(self.torus, out)

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentQ)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def is_monomial(self):
        return len(self._terms) == 1 and next(iter(self._terms.values())).is_monomial()

    def inverse(self):
        """Inverse of a unit ``+-q^e X^a``."""
        if not self.is_monomial():
            raise ValueError("only monomials are invertible in the torus")
        (a, c), = self._terms.items()
        (e, k), = c.items()
        if k not in (1, -1):
            raise ValueError("coefficient is not a unit")
        # (k q^e X^a)(k q^-e X^-a) = q^beta(a,-a) = 1
        return QuantumTorusElement(self.torus, {tuple(-x for x in a): LaurentQ({-e: k})})

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.torus.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def _box(self):
        sup = self._terms
        m = self.torus.m
        return ([min(a[i] for a in sup) for i in range(m)], [max(a[i] for a in sup) for i in range(m)])

    def left_divide(self, numerator):
        """The element ``t`` with ``self * t == numerator``.

        Long division on the lexicographic leading term.  Quotient terms are
        confined to the exponent box forced by the supports, which makes the
        loop terminate; ``ValueError`` is raised when no quotient exists.
        """
        if self._check(numerator) is NotImplemented:
            raise TypeError("numerator must be a torus element")
        if not self:
            raise ZeroDivisionError("division by zero torus element")
        if not numerator:
            return self.torus.zero()
        beta = self.torus.beta
        dlo, dhi = self._box()
        nlo, nhi = numerator._box()
        lo = [x - y for x, y in zip(nlo, dlo)]
        hi = [x - y for x, y in zip(nhi, dhi)]
        dlead = max(self._terms)
        dcoef = self._terms[dlead]
        rem = numerator
        quot = {}
        while rem:
            rlead = max(rem._terms)
            t = tuple(x - y for x, y in zip(rlead, dlead))
            if any(v < l or v > h for v, l, h in zip(t, lo, hi)):
                raise ValueError("torus element is not left-divisible")
            c = rem._terms[rlead].exact_div(dcoef.shift(beta(dlead, t)))
            quot[t] = c
            rem = rem - self * QuantumTorusElement(self.torus, {t: c})
        return QuantumTorusElement(self.torus, quot)

    def __str__(self):
        if not self._terms:
            return "0"
        out = ""
        for idx, a in enumerate(sorted(self._terms)):
            c = self._terms[a]
            mono = "X^(" + ",".join(str(x) for x in a) + ")"
            neg = False
            if c.is_monomial():
                (e, k), = c.items()
                neg = k < 0
                body = str(-c if neg else c)
                text = mono if body == "1" else f"{body}*{mono}"
            else:
                text = f"({c})*{mono}"
            if idx == 0:
                out = ("-" if neg else "") + text
            else:
                out += (" - " if neg else " + ") + text
        return out

    def __repr__(self):
        return f"QuantumTorusElement({self})"


def torus_mul(u, v):
    """Product in the based quantum torus."""
    return u * v


def normal_order(a, lambda_):
    """Exponent ``e`` with ``X^a = q^e X_1^a_1 X_2^a_2 ... X_m^a_m``.

    ``e = sum_{i > j} lambda_ij a_i a_j``.
    """
    lam = lambda_ if isinstance(lambda_, Matrix) else Matrix(lambda_)
    m = len(a)
    return sum(lam[i, j] * a[i] * a[j] for i in range(m) for j in range(i))


def commutation_exponent(u, v):
    """``c`` with ``u v = q^c v u``, or ``None`` if no such power exists."""
    uv = u * v
    vu = v * u
    if not uv and not vu:
        return 0
    if set(uv.terms) != set(vu.terms):
        return None
    c = None
    for a, coef in uv.terms.items():
        other = vu.terms[a]
        shift = coef.valuation() - other.valuation()
        if other.shift(shift) != coef or (c is not None and c != shift):
            return None
        c = shift
    return c


def check_q_commute(u, v, expected):
    """True iff ``u v = q^(2 * expected) v u``.

    ``expected`` is the value of the bilinear form, so generators ``X_i``,
    ``X_j`` of the torus of ``Lambda`` pass with ``expected = lambda_ij``.
    """
    return u * v == (v * u).scale(LaurentQ.q(2 * expected))


def mutate_lambda(lambda_, bt, k):
    """Mutate ``Lambda`` in direction ``k`` along the exchange matrix ``bt``.

    Column ``k`` becomes ``-lambda_ik + sum_{r != k} lambda_ir max(0, -b_rk)``
    and row ``k`` is set by skew-symmetry.
    """
    lam = lambda_ if isinstance(lambda_, Matrix) else Matrix(lambda_)
    bt = bt if isinstance(bt, ExchangeMatrix) else ExchangeMatrix(bt)
    m, n = bt.m, bt.n
    if lam.shape != (m, m):
        raise DimensionError(f"Lambda must be {m}x{m}")
    if not 0 <= k < n:
        raise IndexError(f"mutation index {k} outside mutable range 0..{n - 1}")
    neg = [max(0, -bt[r, k]) for r in range(m)]
    out = lam.tolist()
    for i in range(m):
        if i == k:
            continue
        val = -lam[i, k] + sum(lam[i, r] * neg[r] for r in range(m) if r != k)
        out[i][k] = val
        out[k][i] = -val
    return Matrix(out, ncols=m)


@dataclass(frozen=True)
class QuantumSeed:
    """Compatible pair together with a cluster of ``m`` torus elements.

    The cluster elements live in a fixed ambient torus (that of the initial
    seed) and pairwise satisfy ``X_i X_j = q^(2 lambda_ij) X_j X_i``.
    """

    exchange: ExchangeMatrix
    lambda_: Matrix
    cluster: tuple

    @property
    def m(self):
        return self.exchange.m

    @property
    def n(self):
        return self.exchange.n

    @property
    def torus(self):
        return self.cluster[0].torus

    def pair(self):
        return check_compatible(self.exchange, self.lambda_)

    def is_q_commutative(self):
        """Check the pairwise relations against ``lambda_``."""
        x = self.cluster
        return all(
            check_q_commute(x[i], x[j], self.lambda_[i, j])
            for i in range(self.m) for j in range(i + 1, self.m)
        )

    def mutate(self, k):
        return mutate_seed(self, k)


def initial_seed(pair):
    """Seed with ``X_i = X^(e_i)`` in the torus of ``pair.lambda_``."""
    if not isinstance(pair, CompatiblePair):
        raise TypeError("initial_seed expects a CompatiblePair")
    torus = QuantumTorus(pair.lambda_)
    return QuantumSeed(pair.exchange, pair.lambda_, tuple(torus.gen(i) for i in range(pair.m)))


def _exchange_vectors(bt, k):
    m = bt.m
    plus = [max(0, bt[i, k]) for i in range(m)]
    minus = [max(0, -bt[i, k]) for i in range(m)]
    return plus, minus


def mutate_seed(seed, k):
    """Mutate all three components of a quantum seed in direction ``k``.

    The new variable is ``X'_k = X^(-e_k + [b_k]+) + X^(-e_k + [-b_k]+)``
    where ``X^a`` is the normal-ordered monomial of the *current* cluster.
    Writing ``-e_k + w = (-e_k) + w``, each term equals
    ``q^beta(e_k, w) X_k^-1 X^w`` so ``X'_k = X_k^-1 N`` with ``N`` a sum of
    ordered products of the other variables; ``X_k^-1 N`` is computed by
    exact left division.
    """
    pair = seed.pair()
    bt, lam = pair.exchange, pair.lambda_
    m, n = bt.m, bt.n
    if not 0 <= k < n:
        raise IndexError(f"mutation index {k} outside mutable range 0..{n - 1}")
    x = seed.cluster
    torus = seed.torus
    numer = torus.zero()
    for w in _exchange_vectors(bt, k):
        # beta of the current seed, form evaluated on e_k and w
        shift = sum(lam[k, j] * w[j] for j in range(m))
        shift += sum(lam[i, j] * w[i] * w[j] for i in range(m) for j in range(i))
        prod = torus.one()
        for j in range(m):
            if w[j]:
                prod = prod * x[j] ** w[j]
        numer = numer + prod.scale(LaurentQ.q(shift))
    new_xk = x[k].left_divide(numer)
    cluster = x[:k] + (new_xk,) + x[k + 1:]
    new_lam = mutate_lambda(lam, bt, k)
    new_bt = mutate_matrix(bt, k)
    return QuantumSeed(new_bt, new_lam, cluster)
