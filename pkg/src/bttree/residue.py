"""Arithmetic in the residue field GF(p^f).

Elements are coefficient tuples of length f over {0, ..., p-1}, constant
term first.  The modulus is the lexicographically least monic irreducible
polynomial of degree f over F_p, so every field built from the same (p, f)
is literally the same object.
"""

from itertools import product


def _poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a, b, p):
    """Remainder of a modulo b over F_p; b need not be monic."""
    a = _poly_trim(a)
    b = _poly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial modulus is zero")
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        coef = (a[-1] * inv_lead) % p
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[i + shift] = (a[i + shift] - coef * bc) % p
        a = _poly_trim(a)
    return a


def _poly_gcd(a, b, p):
    a, b = _poly_trim(a), _poly_trim(b)
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def _poly_mulmod(a, b, mod, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_mod(out, mod, p)


def _poly_powmod(a, n, mod, p):
    result = [1]
    base = _poly_mod(a, mod, p)
    while n:
        if n & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        n >>= 1
    return result


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    return [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
            for i in range(n)]


def is_irreducible(coeffs, p):
    """Rabin test for a monic polynomial given as a coefficient list."""
    f = len(coeffs) - 1
    if f < 1 or coeffs[-1] != 1:
        return False
    if f == 1:
        return True
    mod = list(coeffs)
    x = [0, 1]
    xp = x
    for _ in range(f):
        xp = _poly_powmod(xp, p, mod, p)
    if _poly_trim(_poly_sub(xp, x, p)):
        return False
    for ell in _prime_divisors(f):
        xq = x
        for _ in range(f // ell):
            xq = _poly_powmod(xq, p, mod, p)
        g = _poly_gcd(_poly_sub(xq, x, p), mod, p)
        if len(g) > 1:
            return False
    return True


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def least_irreducible(p, f):
    """Lexicographically least monic irreducible of degree f over F_p.

    Ordering is on the coefficient tuple (a_0, ..., a_{f-1}), constant
    term most significant.
    """
    for lower in product(range(p), repeat=f):
        coeffs = list(lower) + [1]
        if is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise ArithmeticError(f"no irreducible polynomial of degree {f} over F_{p}")


class ResidueField:
    """GF(p^f) with tuple elements and deterministic generator choice."""

    def __init__(self, p, f, modulus=None):
        self.p = p
        self.f = f
        self.q = p ** f
        if modulus is None:
            modulus = least_irreducible(p, f)
        if len(modulus) != f + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree f")
        if not is_irreducible(list(modulus), p):
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.modulus = tuple(modulus)
        self.zero = (0,) * f
        self.one = tuple([1] + [0] * (f - 1))
        # x^(f+k) reduced mod the modulus, for k = 0..f-2 (used in mul)
        self._red = []
        cur = [(-c) % p for c in modulus[:-1]]
        for _ in range(f - 1):
            self._red.append(tuple(cur))
            cur = [0] + cur
            if cur[-1]:
                lead = cur.pop()
                cur = [(c + lead * r) % p for c, r in zip(cur, self._red[0])]
            else:
                cur.pop()
        self._gen = None
        self._dlog = None

    def element(self, ints):
        return tuple(c % self.p for c in ints)

    def from_int(self, n):
        return tuple([n % self.p] + [0] * (self.f - 1))

    def is_zero(self, t):
        return all(c == 0 for c in t)

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        p, f = self.p, self.f
        conv = [0] * (2 * f - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    conv[i + j] = (conv[i + j] + x * y) % p
        out = conv[:f]
        for k in range(f - 1):
            c = conv[f + k]
            if c:
                red = self._red[k]
                out = [(o + c * r) % p for o, r in zip(out, red)]
        return tuple(out)

    def pow(self, a, n):
        n %= (self.q - 1) if not self.is_zero(a) else 1
        result = self.one
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero in residue field")
        return self.pow(a, self.q - 2)

    def elements(self):
        """All q elements in lexicographic (tuple) order."""
        for tup in product(range(self.p), repeat=self.f):
            yield tup

    def multiplicative_order(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("zero has no multiplicative order")
        n = self.q - 1
        order = n
        for ell in _prime_divisors(n):
            while order % ell == 0 and self.pow(a, order // ell) == self.one:
                order //= ell
        return order

    @property
    def generator(self):
        """Lex-least generator of the multiplicative group."""
        if self._gen is None:
            for t in self.elements():
                if not self.is_zero(t) and self.multiplicative_order(t) == self.q - 1:
                    self._gen = t
                    break
        return self._gen

    def dlog(self, a):
        """Discrete log base the canonical generator."""
        if self._dlog is None:
            table = {}
            g = self.generator
            cur = self.one
            for k in range(self.q - 1):
                table[cur] = k
                cur = self.mul(cur, g)
            self._dlog = table
        return self._dlog[a]

    def sqrt(self, a):
        """A square root in GF(q), or None.  Brute force, fields are small."""
        if self.is_zero(a):
            return self.zero
        if self.p == 2:
            # squaring is a bijection in characteristic 2
            return self.pow(a, self.q // 2)
        if self.pow(a, (self.q - 1) // 2) != self.one:
            return None
        for t in self.elements():
            if self.mul(t, t) == a:
                return t
        return None

    def __repr__(self):
        return f"GF({self.p}^{self.f})"
