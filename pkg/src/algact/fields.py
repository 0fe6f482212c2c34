"""Exact scalar arithmetic over the rationals and over odd prime fields.

All linear algebra in this package is exact: rational scalars are
`fractions.Fraction` values (always in lowest terms with positive
denominator), prime-field scalars are plain ints in the canonical range
``0..p-1``.  Fields of characteristic 2 are rejected at construction time
because several constructions downstream (polarization of squares, the
factor 2 in defect computations) silently degenerate there.

A field object carries the arithmetic; scalars themselves stay raw Python
values, which keeps tight enumeration loops cheap.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    CharTwoForbidden,
    DivisionByZero,
    FieldMismatch,
    InputError,
    NotPrime,
)

__all__ = ["Field", "Rationals", "PrimeField", "Q", "GF", "make_field", "scalar_arith"]

# deterministic Miller-Rabin witnesses, valid for every n < 3.3 * 10^24
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """Common interface: exact arithmetic on raw scalar values."""

    char: int

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        if self.is_zero(b):
            raise DivisionByZero("division by zero")
        return self.mul(a, self.inv(b))

    def eq(self, a, b) -> bool:
        return a == b

    def is_zero(self, a) -> bool:
        return a == self.zero

    def contains(self, a) -> bool:
        raise NotImplementedError

    def of(self, x):
        """Coerce an int, string or scalar into canonical form."""
        raise NotImplementedError

    def to_str(self, a) -> str:
        raise NotImplementedError

    def to_json(self):
        raise NotImplementedError

    @staticmethod
    def from_json(data) -> "Field":
        if data == "Q":
            return Q
        if isinstance(data, dict) and set(data) == {"p"}:
            return GF(int(data["p"]))
        raise InputError(f"unrecognized field description: {data!r}")


class Rationals(Field):
    char = 0

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return 1 / Fraction(a)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def contains(self, a) -> bool:
        return isinstance(a, (Fraction, int)) and not isinstance(a, bool)

    def of(self, x):
        if isinstance(x, str):
            try:
                return Fraction(x)
            except (ValueError, ZeroDivisionError) as exc:
                raise InputError(f"bad rational literal {x!r}") from exc
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            return Fraction(x)
        raise FieldMismatch(f"{x!r} is not a rational scalar")

    def to_str(self, a) -> str:
        return str(Fraction(a))

    def to_json(self):
        return "Q"

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")


class PrimeField(Field):
    """The field with p elements, p an odd prime; scalars are ints in [0, p)."""

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise NotPrime(p)
        if p == 2:
            raise CharTwoForbidden()
        self.p = p
        self.char = p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero("inverse of zero")
        return pow(a, self.p - 2, self.p)

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def contains(self, a) -> bool:
        return isinstance(a, int) and not isinstance(a, bool) and 0 <= a < self.p

    def of(self, x):
        if isinstance(x, str):
            try:
                return int(x, 10) % self.p
            except ValueError as exc:
                raise InputError(f"bad residue literal {x!r}") from exc
        if isinstance(x, int) and not isinstance(x, bool):
            return x % self.p
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise DivisionByZero(f"denominator of {x} vanishes mod {self.p}")
            return x.numerator * self.inv(x.denominator % self.p) % self.p
        raise FieldMismatch(f"{x!r} is not an F_{self.p} scalar")

    def elements(self):
        return range(self.p)

    def to_str(self, a) -> str:
        return str(a)

    def to_json(self):
        return {"p": self.p}

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


Q = Rationals()

_PRIME_CACHE: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    field = _PRIME_CACHE.get(p)
    if field is None:
        field = PrimeField(p)
        _PRIME_CACHE[p] = field
    return field


def make_field(kind: str, p: int | None = None) -> Field:
    """Build a validated field from a kind tag.

    ``kind`` is ``"Q"``/``"rationals"`` or ``"Fp"``/``"prime"`` (the latter
    require ``p``).  Characteristic 2 is refused here, once, rather than in
    every downstream computation.
    """
    if kind in ("Q", "rationals"):
        return Q
    if kind in ("Fp", "prime", "prime_field"):
        if p is None:
            raise InputError("prime field requires p")
        return GF(p)
    raise InputError(f"unknown field kind {kind!r}")


def scalar_arith(field: Field, op: str, a, b=None):
    """Single-dispatch scalar arithmetic with canonicalized results.

    Mainly a uniform surface for tests and scripting; library code calls the
    field methods directly.
    """
    if not field.contains(a):
        raise FieldMismatch(f"{a!r} does not belong to {field!r}")
    a = field.of(a)
    if op in ("add", "sub", "mul", "div", "eq"):
        if b is None:
            raise InputError(f"{op} needs two operands")
        if not field.contains(b):
            raise FieldMismatch(f"{b!r} does not belong to {field!r}")
        return getattr(field, op)(a, field.of(b))
    if op in ("neg", "inv"):
        if b is not None:
            raise InputError(f"{op} takes one operand")
        return getattr(field, op)(a)
    raise InputError(f"unknown scalar operation {op!r}")
