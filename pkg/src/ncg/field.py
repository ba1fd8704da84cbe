"""Exact arithmetic in small finite fields F_{p^m}.

Field elements are plain ints in ``range(q)`` encoding coefficient vectors
of F_p[t]/(modulus) in base p, little-endian: the element ``sum(c_k t^k)``
is the integer ``sum(c_k p^k)``.  Under this encoding 0 and 1 are the
additive and multiplicative identities of every field, and the canonical
element order is simply 0, 1, ..., q-1.  All arithmetic is precomputed
into dense tables at construction; the fields used by this project are
tiny (q <= 9 in practice), so table size is never a concern.
"""

from __future__ import annotations

from itertools import product

MAX_Q = 512

# Default defining polynomials, little-endian coefficient lists (monic).
_DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),      # t^2 + t + 1
    (2, 3): (1, 1, 0, 1),   # t^3 + t + 1
    (3, 2): (1, 0, 1),      # t^2 + 1
}


class FieldError(ValueError):
    """Invalid field specification: non-prime p, reducible modulus, oversize q."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _poly_rem(num: list[int], den: tuple[int, ...], p: int) -> list[int]:
    """Remainder of num modulo den over F_p (den monic), little-endian lists."""
    num = [c % p for c in num]
    dd = len(den) - 1
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c == 0:
            continue
        for i, dc in enumerate(den):
            num[k - dd + i] = (num[k - dd + i] - c * dc) % p
    while num and num[-1] == 0:
        num.pop()
    return num


def _is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    m = len(modulus) - 1
    for d in range(1, m // 2 + 1):
        for tail in product(range(p), repeat=d):
            den = tuple(tail) + (1,)
            if not _poly_rem(list(modulus), den, p):
                return False
    return True


def _default_modulus(p: int, m: int) -> tuple[int, ...]:
    hit = _DEFAULT_MODULI.get((p, m))
    if hit is not None:
        return hit
    # Deterministic fallback: lexicographically first irreducible monic poly.
    for tail in product(range(p), repeat=m):
        cand = tuple(tail) + (1,)
        if _is_irreducible(cand, p):
            return cand
    raise FieldError(f"no irreducible polynomial of degree {m} over F_{p}")


class GF:
    """The finite field F_{p^m} with table-driven arithmetic.

    Elements are the ints 0..q-1; ``coeffs``/``from_coeffs`` convert to and
    from the underlying length-m coefficient vectors over F_p.
    """

    __slots__ = ("p", "m", "q", "modulus", "_add", "_mul", "_neg", "_inv")

    def __init__(self, p: int, m: int = 1, modulus=None):
        if not _is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if m < 1:
            raise FieldError(f"extension degree must be positive, got {m}")
        q = p**m
        if q > MAX_Q:
            raise FieldError(f"field size {q} exceeds the supported maximum {MAX_Q}")
        if m == 1:
            modulus = None
        else:
            if modulus is None:
                modulus = _default_modulus(p, m)
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise FieldError(
                    f"modulus must be monic of degree {m}, got {modulus}"
                )
            if not _is_irreducible(modulus, p):
                raise FieldError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.m = m
        self.q = q
        self.modulus = modulus
        self._build_tables()

    def _build_tables(self) -> None:
        p, m, q = self.p, self.m, self.q
        if m == 1:
            add = [[(a + b) % p for b in range(p)] for a in range(p)]
            mul = [[(a * b) % p for b in range(p)] for a in range(p)]
        else:
            coeffs = [self.coeffs(a) for a in range(q)]
            add = [
                [
                    self.from_coeffs([(x + y) % p for x, y in zip(coeffs[a], coeffs[b])])
                    for b in range(q)
                ]
                for a in range(q)
            ]
            mul = []
            for a in range(q):
                row = []
                for b in range(q):
                    conv = [0] * (2 * m - 1)
                    for i, x in enumerate(coeffs[a]):
                        if x:
                            for j, y in enumerate(coeffs[b]):
                                conv[i + j] += x * y
                    row.append(self.from_coeffs(_poly_rem(conv, self.modulus, p)))
                mul.append(row)
        self._add = tuple(tuple(r) for r in add)
        self._mul = tuple(tuple(r) for r in mul)
        self._neg = tuple(next(b for b in range(q) if self._add[a][b] == 0) for a in range(q))
        inv = [0] * q
        for a in range(1, q):
            inv[a] = next(b for b in range(1, q) if self._mul[a][b] == 1)
        self._inv = tuple(inv)

    # -- arithmetic ---------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self._inv[a]

    def elements(self) -> range:
        """All q field elements; the first is 0 and the second is 1."""
        return range(self.q)

    # -- encoding -----------------------------------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Length-m coefficient vector of element a, little-endian."""
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def from_coeffs(self, cs) -> int:
        """Element encoded by a coefficient list (length <= m)."""
        cs = list(cs)
        if len(cs) > self.m:
            raise FieldError(f"coefficient vector longer than degree {self.m}: {cs}")
        out = 0
        for c in reversed(cs):
            out = out * self.p + (c % self.p)
        return out

    # -- identity -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, GF):
            return NotImplemented
        return (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}, modulus={self.modulus})"


def field_for(q: int, modulus=None) -> GF:
    """Construct F_q for a prime power q, factoring q as p^m."""
    if q < 2:
        raise FieldError(f"field size must be at least 2, got {q}")
    p = next((d for d in range(2, q + 1) if q % d == 0), q)
    m = 0
    rest = q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise FieldError(f"{q} is not a prime power")
    return GF(p, m, modulus)
