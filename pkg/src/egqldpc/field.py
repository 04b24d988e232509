"""Finite field arithmetic over F_{p^t} with discrete log/antilog tables.

Elements are encoded as radix-p integers: the coefficient of x^i sits in
digit i, so ``rep = sum(c_i * p**i)`` and 0 is the zero element.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Sequence

MAX_FIELD_SIZE = 2**20


class FieldError(ValueError):
    """Invalid field parameters or operands."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
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


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, s) with q = p**s, or raise FieldError."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    p = prime_factors(q)[0]
    s = 0
    r = q
    while r % p == 0:
        r //= p
        s += 1
    if r != 1:
        raise FieldError(f"{q} is not a prime power")
    return p, s


def _digits(rep: int, p: int, t: int) -> list[int]:
    out = []
    for _ in range(t):
        rep, d = divmod(rep, p)
        out.append(d)
    return out


def _undigits(digits: Sequence[int], p: int) -> int:
    rep = 0
    for d in reversed(digits):
        rep = rep * p + d
    return rep


def _poly_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    # a, b have len t (low to high); mod is monic with len t+1
    t = len(mod) - 1
    prod = [0] * (2 * t - 1) if t > 0 else [0]
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for k in range(len(prod) - 1, t - 1, -1):
        c = prod[k]
        if c:
            for i in range(t + 1):
                prod[k - t + i] = (prod[k - t + i] - c * mod[i]) % p
    return (prod + [0] * t)[:t]


def _poly_powmod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    t = len(mod) - 1
    result = [1] + [0] * (t - 1)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def is_primitive(modulus: Sequence[int], p: int) -> bool:
    """True iff x has multiplicative order p^t - 1 modulo ``modulus``.

    Order p^t - 1 is only reachable when the quotient ring is a field, so
    this also certifies irreducibility.
    """
    mod = [c % p for c in modulus]
    t = len(mod) - 1
    if t < 1 or mod[-1] != 1:
        return False
    order = p**t - 1
    one = [1] + [0] * (t - 1)
    if t == 1:
        x = [(-mod[0]) % p]
    else:
        x = [0, 1] + [0] * (t - 2)
    if _poly_powmod(x, order, mod, p) != one:
        return False
    return all(_poly_powmod(x, order // r, mod, p) != one for r in prime_factors(order))


def default_modulus(p: int, t: int) -> tuple[int, ...]:
    """Lexicographically smallest primitive monic polynomial of degree t.

    Candidates are ordered by their radix-p integer encoding (leading x^t
    included), i.e. by trying p^t, p^t + 1, ... in turn.
    """
    for code in range(p**t, 2 * p**t):
        coeffs = _digits(code, p, t + 1)
        if is_primitive(coeffs, p):
            return tuple(coeffs)
    raise FieldError(f"no primitive polynomial found for p={p}, t={t}")  # pragma: no cover


@dataclass(frozen=True)
class FieldSpec:
    p: int
    t: int
    modulus: tuple[int, ...]  # low-to-high coefficients, monic, length t + 1

    @property
    def order(self) -> int:
        return self.p**self.t


@dataclass(frozen=True, eq=False)
class FieldTable:
    """Log/antilog tables for F_{p^t} relative to a fixed primitive element."""

    spec: FieldSpec
    antilog: tuple[int, ...]
    log: dict[int, int] = field(repr=False)

    @property
    def p(self) -> int:
        return self.spec.p

    @property
    def order(self) -> int:
        return self.spec.order

    @property
    def group_order(self) -> int:
        return self.spec.order - 1

    def alpha_pow(self, i: int) -> int:
        return self.antilog[i % self.group_order]

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p, t = self.p, self.spec.t
        return _undigits([(x + y) % p for x, y in zip(_digits(a, p, t), _digits(b, p, t))], p)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p, t = self.p, self.spec.t
        return _undigits([(-x) % p for x in _digits(a, p, t)], p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.antilog[(self.log[a] + self.log[b]) % self.group_order]

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("inverse of zero")
        return self.antilog[-self.log[a] % self.group_order]

    def element(self, rep: int) -> FieldElement:
        if not 0 <= rep < self.order:
            raise FieldError(f"rep {rep} outside [0, {self.order})")
        return FieldElement(rep, self)


@dataclass(frozen=True)
class FieldElement:
    rep: int
    table: FieldTable = field(repr=False, compare=True)

    def _check(self, other: FieldElement) -> None:
        if other.table is not self.table:
            raise FieldError("operands belong to different fields")

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.table.add(self.rep, other.rep), self.table)

    def __sub__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.table.sub(self.rep, other.rep), self.table)

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.table.mul(self.rep, other.rep), self.table)

    def inverse(self) -> FieldElement:
        return FieldElement(self.table.inv(self.rep), self.table)


def build_field(p: int, t: int, modulus: Sequence[int] | None = None) -> FieldTable:
    """Build log/antilog tables for F_{p^t}.

    ``modulus`` lists coefficients from x^0 up to the leading x^t. When it
    is omitted the smallest primitive polynomial is chosen, so tables are
    reproducible.
    """
    if not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if t < 1:
        raise FieldError("extension degree must be >= 1")
    if p**t > MAX_FIELD_SIZE:
        raise FieldError(f"field size {p}^{t} exceeds cap {MAX_FIELD_SIZE}")
    if modulus is None:
        mod = default_modulus(p, t)
    else:
        mod = tuple(int(c) % p for c in modulus)
        if len(mod) != t + 1 or mod[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {t}")
        if not is_primitive(mod, p):
            raise FieldError(f"modulus {mod} is not primitive over F_{p}")

    order = p**t
    if t == 1:
        alpha = (-mod[0]) % p
        antilog = [1]
        for _ in range(order - 2):
            antilog.append(antilog[-1] * alpha % p)
    elif p == 2:
        red = _undigits(mod[:t], 2)
        top = 1 << t
        antilog = [1]
        for _ in range(order - 2):
            v = antilog[-1] << 1
            if v & top:
                v ^= top ^ red
            antilog.append(v)
    else:
        antilog = [1]
        cur = [1] + [0] * (t - 1)
        for _ in range(order - 2):
            lead = cur[-1]
            cur = [0] + cur[:-1]
            if lead:
                cur = [(c - lead * m) % p for c, m in zip(cur, mod[:t])]
            antilog.append(_undigits(cur, p))

    log = {a: i for i, a in enumerate(antilog)}
    if len(log) != order - 1:  # pragma: no cover - guarded by is_primitive
        raise FieldError("antilog table has repeated entries")
    return FieldTable(FieldSpec(p, t, mod), tuple(antilog), log)


def fe_arith(a: FieldElement, b: FieldElement | None, kind: Literal["add", "mul", "inv"]) -> FieldElement:
    if kind == "add":
        assert b is not None
        return a + b
    if kind == "mul":
        assert b is not None
        return a * b
    if kind == "inv":
        return a.inverse()
    raise ValueError(f"unknown operation {kind!r}")


def subfield_elements(big: FieldTable, q: int) -> list[int]:
    """Reps of the order-q subfield: 0 followed by alpha^(j*step), j < q - 1."""
    p, s = prime_power(q)
    if p != big.p or big.spec.t % s:
        raise FieldError(f"F_{q} is not a subfield of F_{big.p}^{big.spec.t}")
    step = big.group_order // (q - 1)
    return [0] + [big.antilog[j * step] for j in range(q - 1)]
