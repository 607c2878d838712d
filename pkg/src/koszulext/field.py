"""Exact arithmetic in F_p and small extensions F_{p^n} with Frobenius.

Elements of F_{p^n} are coefficient vectors of length n over F_p, reduced
modulo an irreducible degree-n polynomial supplied at construction (low
degree first).  The Frobenius a -> a^p and its inverse are exposed; on the
prime field both are the identity.
"""

from __future__ import annotations

import itertools


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _poly_trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a, m, p):
    # m monic of degree d; reduce a modulo m
    a = list(a)
    d = len(m) - 1
    while len(a) > d:
        top = a.pop()
        if top:
            for j in range(d):
                a[len(a) - d + j] = (a[len(a) - d + j] - top * m[j]) % p
    return _poly_trim(a)


def _poly_rem(a, g, p):
    """Remainder of a modulo a monic polynomial g, coefficients low first."""
    a = list(a)
    dg = len(g) - 1
    while True:
        a = list(_poly_trim(a))
        if not a or len(a) - 1 < dg:
            return tuple(a)
        top = a[-1]
        shift = len(a) - 1 - dg
        for j in range(len(g)):
            a[shift + j] = (a[shift + j] - top * g[j]) % p
        a.pop()


def _is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Exhaustive trial division by all monic factors of degree <= n/2."""
    n = len(modulus) - 1
    if n < 1 or modulus[-1] == 0 or modulus[0] == 0:
        return False
    for d in range(1, n // 2 + 1):
        for lower in itertools.product(range(p), repeat=d):
            g = lower + (1,)
            if not _poly_rem(modulus, g, p):
                return False
    return True


class FieldElement:
    """An element of a FrobeniusField, immutable and hashable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: "FrobeniusField", coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    def __add__(self, other):
        self.field._check(other)
        p = self.field.p
        return FieldElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self.field._check(other)
        p = self.field.p
        return FieldElement(self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            p = self.field.p
            return FieldElement(self.field, tuple((a * other) % p for a in self.coeffs))
        self.field._check(other)
        return self.field._mul(self, other)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "FieldElement":
        if not self:
            raise ZeroDivisionError("inverse of zero field element")
        # a^(p^n - 2) = a^(-1)
        return self ** (self.field.order - 2)

    def frobenius(self, s: int = 1) -> "FieldElement":
        return self.field.frobenius(self, s)

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and self.field is other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def __int__(self):
        if self.field.n != 1:
            raise ValueError("only prime-field elements convert to int")
        return self.coeffs[0]

    def __repr__(self):
        if self.field.n == 1:
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else str(c) + "*"
                terms.append(f"{head}g" + (f"^{i}" if i > 1 else ""))
        return "+".join(terms) if terms else "0"


class FrobeniusField:
    """F_{p^n} presented by an irreducible modulus over F_p (n=1: prime field)."""

    def __init__(self, p: int, n: int = 1, modulus=None):
        if not is_prime(p):
            raise ValueError(f"p={p} is not prime")
        if n < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.n = n
        self.order = p**n
        if n == 1:
            self.modulus = (0, 1) if modulus is None else tuple(c % p for c in modulus)
        else:
            if modulus is None:
                raise ValueError("an explicit irreducible modulus is required for n > 1")
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != n + 1:
                raise ValueError("modulus must have degree n (n+1 coefficients, low first)")
            lead = modulus[-1]
            if lead != 1:
                inv = pow(lead, p - 2, p)
                modulus = tuple((c * inv) % p for c in modulus)
            if not _is_irreducible(modulus, p):
                raise ValueError("modulus is reducible over F_p")
            self.modulus = modulus
        self.zero = FieldElement(self, (0,) * n)
        self.one = FieldElement(self, (1,) + (0,) * (n - 1))

    def _check(self, other):
        if not isinstance(other, FieldElement) or other.field is not self:
            raise ValueError("field mismatch")

    def element(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            self._check(value)
            return value
        if isinstance(value, int):
            return FieldElement(self, (value % self.p,) + (0,) * (self.n - 1))
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) > self.n:
            coeffs = _poly_mod(coeffs, self.modulus, self.p)
        coeffs = coeffs + (0,) * (self.n - len(coeffs))
        return FieldElement(self, coeffs)

    @property
    def gen(self) -> FieldElement:
        """The class of the variable in F_p[g]/(modulus); equals 1 when n=1."""
        if self.n == 1:
            return self.one
        return FieldElement(self, (0, 1) + (0,) * (self.n - 2))

    def _mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        raw = _poly_mul(a.coeffs, b.coeffs, self.p)
        red = _poly_mod(raw, self.modulus, self.p)
        return FieldElement(self, tuple(red) + (0,) * (self.n - len(red)))

    def frobenius(self, a: FieldElement, s: int = 1) -> FieldElement:
        """a^(p^s); s may be negative since phi^n = id on F_{p^n}."""
        self._check(a)
        s %= self.n
        result = a
        for _ in range(s):
            result = result * result if self.p == 2 else result ** self.p
        return result

    def elements(self):
        """All p^n elements (small fields only)."""
        for coeffs in itertools.product(range(self.p), repeat=self.n):
            yield FieldElement(self, coeffs)

    def random(self, rng) -> FieldElement:
        return FieldElement(self, tuple(rng.randrange(self.p) for _ in range(self.n)))

    def __eq__(self, other):
        return (
            isinstance(other, FrobeniusField)
            and self.p == other.p
            and self.n == other.n
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.n, self.modulus))

    def __repr__(self):
        if self.n == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.n})"


def GF(p: int, n: int = 1, modulus=None) -> FrobeniusField:
    """Convenience constructor with a couple of stock moduli for tests."""
    if n > 1 and modulus is None:
        stock = {(2, 2): (1, 1, 1), (3, 2): (1, 0, 1), (2, 3): (1, 1, 0, 1)}
        modulus = stock.get((p, n))
        if modulus is None:
            raise ValueError("no stock modulus for this field; pass one explicitly")
    return FrobeniusField(p, n, modulus)
