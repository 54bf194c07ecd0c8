"""Exact arithmetic for pluggable commutative rings.

Ring elements are plain canonical payload values rather than wrapper
objects: arbitrary-precision ``int`` for the integer ring,
``fractions.Fraction`` (reduced, positive denominator) for rationals,
residues in ``[0, m)`` for modular rings, and 2-tuples ``(a, b)`` meaning
``a + b*x`` with ``x**2 == 1`` for group rings of the order-two cyclic
group.  Payload equality is ring-element equality, and every operation
returns a payload in canonical form.  A :class:`Ring` instance supplies
the arithmetic, parsing/formatting, and sampling for its payloads.

Ring literals: ``int``, ``rat``, ``zmod:<m>``, ``gf:<p>`` (prime p), and
``c2:<ring>`` for the group-ring constructor (nesting allowed).
"""

from __future__ import annotations

from fractions import Fraction


class RingError(ValueError):
    """Malformed ring literal, element literal, or invalid ring parameter."""


class RingMismatchError(RingError):
    """Two operands live in different rings."""

    def __init__(self, left: "Ring", right: "Ring", what: str = "elements"):
        super().__init__(
            f"cannot mix {what} over {left.literal()} and over {right.literal()}"
        )
        self.left = left
        self.right = right


def ensure_same_ring(a: "Ring", b: "Ring", what: str = "elements") -> None:
    if a != b:
        raise RingMismatchError(a, b, what)


def is_prime(m: int) -> bool:
    """Deterministic trial division; moduli here are desk-scale."""
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


class Ring:
    """A commutative ring with identity, operating on canonical payloads."""

    is_field: bool = False

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_int(self, k: int):
        """Image of the integer ``k`` under the unique map from the integers."""
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def inv(self, a):
        """Multiplicative inverse payload, or None if ``a`` is not a unit."""
        raise NotImplementedError

    def invert_two(self):
        """Payload d with 2*d == 1 if 2 is a unit, else None."""
        return self.inv(self.from_int(2))

    def format(self, a) -> str:
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def sample(self, rng):
        """Random canonical payload from a small box, via ``rng``."""
        raise NotImplementedError

    def literal(self) -> str:
        raise NotImplementedError

    def __repr__(self) -> str:
        return self.literal()


class IntegerRing(Ring):
    is_field = False

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, k):
        return int(k)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return a if a in (1, -1) else None

    def format(self, a):
        return str(a)

    def parse(self, text):
        try:
            return int(text.strip())
        except ValueError:
            raise RingError(f"bad integer literal {text!r}") from None

    def sample(self, rng):
        return rng.randint(-9, 9)

    def literal(self):
        return "int"

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("int")


class RationalRing(Ring):
    is_field = True

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, k):
        return Fraction(k)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return 1 / a if a else None

    def format(self, a):
        return str(a)

    def parse(self, text):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError):
            raise RingError(f"bad rational literal {text!r}") from None

    def sample(self, rng):
        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))

    def literal(self):
        return "rat"

    def __eq__(self, other):
        return isinstance(other, RationalRing)

    def __hash__(self):
        return hash("rat")


class ModularRing(Ring):
    """Integers modulo m, residues stored in [0, m); a field iff m is prime."""

    def __init__(self, modulus: int):
        if not isinstance(modulus, int) or modulus < 2:
            raise RingError(f"modulus must be an integer >= 2, got {modulus!r}")
        self.modulus = modulus
        self.is_field = is_prime(modulus)

    def zero(self):
        return 0

    def one(self):
        return 1 % self.modulus

    def from_int(self, k):
        return int(k) % self.modulus

    def add(self, a, b):
        return (a + b) % self.modulus

    def neg(self, a):
        return (-a) % self.modulus

    def mul(self, a, b):
        return (a * b) % self.modulus

    def inv(self, a):
        try:
            return pow(a, -1, self.modulus)
        except ValueError:
            return None

    def format(self, a):
        return str(a)

    def parse(self, text):
        try:
            return int(text.strip()) % self.modulus
        except ValueError:
            raise RingError(f"bad residue literal {text!r}") from None

    def sample(self, rng):
        return rng.randrange(self.modulus)

    def literal(self):
        return f"gf:{self.modulus}" if self.is_field else f"zmod:{self.modulus}"

    def __eq__(self, other):
        return isinstance(other, ModularRing) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("mod", self.modulus))


def _strip_outer_parens(text: str) -> str:
    t = text.strip()
    while len(t) >= 2 and t[0] == "(" and t[-1] == ")":
        depth = 0
        closes_at_end = True
        for idx, ch in enumerate(t):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0 and idx != len(t) - 1:
                    closes_at_end = False
                    break
        if not closes_at_end:
            break
        t = t[1:-1].strip()
    return t


class GroupRingC2(Ring):
    """Group ring of the cyclic group of order two over a base ring.

    Payloads are pairs ``(a, b)`` standing for ``a + b*x`` with ``x*x == 1``:
    ``(a + b*x)(a1 + b1*x) == (a*a1 + b*b1) + (a*b1 + b*a1)*x``.
    Elements print as ``a+b*x``; when the base is itself a group ring the
    two components are parenthesized so nested literals stay unambiguous.
    """

    is_field = False

    def __init__(self, base: Ring):
        if not isinstance(base, Ring):
            raise RingError(f"group-ring base must be a ring, got {base!r}")
        self.base = base

    def zero(self):
        z = self.base.zero()
        return (z, z)

    def one(self):
        return (self.base.one(), self.base.zero())

    def x(self):
        """The order-two generator."""
        return (self.base.zero(), self.base.one())

    def from_int(self, k):
        return (self.base.from_int(k), self.base.zero())

    def add(self, a, b):
        return (self.base.add(a[0], b[0]), self.base.add(a[1], b[1]))

    def neg(self, a):
        return (self.base.neg(a[0]), self.base.neg(a[1]))

    def mul(self, a, b):
        R = self.base
        return (
            R.add(R.mul(a[0], b[0]), R.mul(a[1], b[1])),
            R.add(R.mul(a[0], b[1]), R.mul(a[1], b[0])),
        )

    def inv(self, a):
        # a + b*x is a unit iff the determinant a^2 - b^2 of its
        # multiplication matrix [[a, b], [b, a]] is a unit in the base.
        R = self.base
        det = R.sub(R.mul(a[0], a[0]), R.mul(a[1], a[1]))
        d = R.inv(det)
        if d is None:
            return None
        return (R.mul(a[0], d), R.neg(R.mul(a[1], d)))

    def format(self, a):
        left, right = self.base.format(a[0]), self.base.format(a[1])
        if isinstance(self.base, GroupRingC2):
            left, right = f"({left})", f"({right})"
        return f"{left}+{right}*x"

    def parse(self, text):
        t = text.strip()
        split = -1
        depth = 0
        for idx, ch in enumerate(t):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "+" and depth == 0 and idx > 0:
                split = idx
        if split < 0 or not t.endswith("*x"):
            raise RingError(
                f"bad group-ring literal {text!r} for {self.literal()}; expected a+b*x"
            )
        a_txt = _strip_outer_parens(t[:split])
        b_txt = _strip_outer_parens(t[split + 1 : -2])
        return (self.base.parse(a_txt), self.base.parse(b_txt))

    def sample(self, rng):
        return (self.base.sample(rng), self.base.sample(rng))

    def literal(self):
        return "c2:" + self.base.literal()

    def __eq__(self, other):
        return isinstance(other, GroupRingC2) and other.base == self.base

    def __hash__(self):
        return hash(("c2", self.base))


def group_ring_c2(base: Ring) -> GroupRingC2:
    """Group-ring constructor over the order-two cyclic group."""
    return GroupRingC2(base)


def ring_from_literal(text: str) -> Ring:
    """Parse a ring literal: int, rat, zmod:<m>, gf:<p>, c2:<ring>."""
    t = text.strip()
    if t == "int":
        return IntegerRing()
    if t == "rat":
        return RationalRing()
    if t.startswith("zmod:"):
        try:
            m = int(t[5:])
        except ValueError:
            raise RingError(f"bad modulus in ring literal {text!r}") from None
        return ModularRing(m)
    if t.startswith("gf:"):
        try:
            p = int(t[3:])
        except ValueError:
            raise RingError(f"bad prime in ring literal {text!r}") from None
        if not is_prime(p):
            raise RingError(f"gf:{p} needs a prime; use zmod:{p} for a non-field modulus")
        return ModularRing(p)
    if t.startswith("c2:"):
        return GroupRingC2(ring_from_literal(t[3:]))
    raise RingError(f"unknown ring literal {text!r}")
