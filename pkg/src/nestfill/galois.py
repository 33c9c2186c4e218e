"""Exact arithmetic in GF(p^u).

Elements are polynomials over Z_p reduced modulo a fixed monic irreducible
polynomial of degree u.  An element is identified by its integer code
``sum_j c_j * p**j`` where ``c_j`` is the coefficient of x^j; codes run from
0 to p**u - 1 and ascending code order is the canonical element order used
everywhere in this package (enumeration, relabeling, file formats).

Polynomials are handled as coefficient tuples, lowest degree first.  Fields
here are tiny (a few dozen elements at most in practice), so irreducibility
is checked by exhaustive trial division and inverses by exhaustive search.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import SpecError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _poly_trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    """Product of two coefficient tuples over Z_p (no modular reduction)."""
    a, b = _poly_trim(a), _poly_trim(b)
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def poly_residue(a: Sequence[int], m: Sequence[int], p: int) -> tuple[int, ...]:
    """Residue of polynomial a modulo polynomial m, coefficients in Z_p.

    m must be nonzero; it need not be monic (its leading coefficient is
    inverted mod p).
    """
    m = _poly_trim(m)
    if not m:
        raise SpecError("division by the zero polynomial")
    lead_inv = pow(m[-1], p - 2, p) if m[-1] != 1 else 1
    r = [c % p for c in a]
    while len(_poly_trim(r)) >= len(m):
        r = list(_poly_trim(r))
        shift = len(r) - len(m)
        factor = (r[-1] * lead_inv) % p
        for i, mc in enumerate(m):
            r[shift + i] = (r[shift + i] - factor * mc) % p
    return _poly_trim(r)


def _poly_is_irreducible(m: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(m)/2."""
    m = _poly_trim(m)
    deg = len(m) - 1
    for d in range(1, deg // 2 + 1):
        for tail in range(p**d):
            div = _digits(tail, p, d) + (1,)
            if not poly_residue(m, div, p):
                return False
    return True


def _digits(code: int, p: int, width: int) -> tuple[int, ...]:
    out = []
    for _ in range(width):
        out.append(code % p)
        code //= p
    return tuple(out)


def _default_modulus(p: int, u: int) -> tuple[int, ...]:
    # Smallest monic irreducible of degree u by ascending tail code, with a
    # nonzero constant term (at u=1 this selects x+1 rather than x).
    for tail in range(p**u):
        if tail % p == 0:
            continue
        cand = _digits(tail, p, u) + (1,)
        if _poly_is_irreducible(cand, p):
            return cand
    raise SpecError(f"no irreducible polynomial of degree {u} over Z_{p}")


_TERM_RE = re.compile(r"^(\d*)(x(?:\^(\d+))?)?$")


class Field:
    """GF(p**u) with elements encoded as integers 0 .. p**u - 1.

    The modulus may be supplied as u+1 coefficients (lowest degree first,
    monic, irreducible); by default the smallest monic irreducible with a
    nonzero constant term is selected, which for p=2 and u=1,2,3 gives
    x+1, x^2+x+1 and x^3+x+1.
    """

    def __init__(self, p: int, u: int, modulus: Optional[Sequence[int]] = None):
        if not is_prime(p):
            raise SpecError(f"p={p} is not prime")
        if u < 1:
            raise SpecError(f"extension degree must be >= 1, got {u}")
        self.p = p
        self.u = u
        self.size = p**u
        if modulus is None:
            self.modulus = _default_modulus(p, u)
        else:
            mod = tuple(int(c) % p for c in modulus)
            if len(mod) != u + 1 or mod[-1] != 1:
                raise SpecError(f"modulus must be monic of degree {u}")
            if not _poly_is_irreducible(mod, p):
                raise SpecError("modulus is reducible over Z_%d" % p)
            self.modulus = mod
        self._hash = hash((self.p, self.u, self.modulus))

    # -- code-level arithmetic -------------------------------------------

    def coeffs(self, code: int) -> tuple[int, ...]:
        return _digits(code, self.p, self.u)

    def encode(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.u and any(c % self.p for c in coeffs[self.u :]):
            raise SpecError("coefficient vector exceeds field degree")
        return sum((c % self.p) * self.p**j for j, c in enumerate(coeffs[: self.u]))

    def add_codes(self, a: int, b: int) -> int:
        ca, cb = self.coeffs(a), self.coeffs(b)
        return self.encode([(x + y) % self.p for x, y in zip(ca, cb)])

    def neg_code(self, a: int) -> int:
        return self.encode([(-c) % self.p for c in self.coeffs(a)])

    def sub_codes(self, a: int, b: int) -> int:
        return self.add_codes(a, self.neg_code(b))

    def mul_codes(self, a: int, b: int) -> int:
        prod = poly_mul(self.coeffs(a), self.coeffs(b), self.p)
        return self.encode(poly_residue(prod, self.modulus, self.p))

    def inv_code(self, a: int) -> int:
        if a == 0:
            raise SpecError("zero has no multiplicative inverse")
        for b in range(1, self.size):
            if self.mul_codes(a, b) == 1:
                return b
        raise AssertionError("unreachable: field element without inverse")

    def pow_code(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul_codes(result, base)
            base = self.mul_codes(base, base)
            e >>= 1
        return result

    # -- element API ------------------------------------------------------

    def element(self, code: int) -> "FieldElement":
        if not 0 <= code < self.size:
            raise SpecError(f"code {code} out of range for GF({self.size})")
        return FieldElement(self, code)

    def from_coeffs(self, coeffs: Sequence[int]) -> "FieldElement":
        return self.element(self.encode(coeffs))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> list["FieldElement"]:
        """All elements in ascending canonical code order (zero first)."""
        return [FieldElement(self, c) for c in range(self.size)]

    # -- text form ---------------------------------------------------------

    def text_code(self, code: int) -> str:
        terms = []
        cs = self.coeffs(code)
        for j in range(self.u - 1, -1, -1):
            c = cs[j]
            if c == 0:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                var = "x" if j == 1 else f"x^{j}"
                terms.append(var if c == 1 else f"{c}{var}")
        return "+".join(terms) if terms else "0"

    def parse_code(self, text: str) -> int:
        s = text.replace(" ", "")
        if s == "0":
            return 0
        coeffs = [0] * self.u
        seen = set()
        for term in s.split("+"):
            m = _TERM_RE.match(term)
            if not m or (not m.group(1) and not m.group(2)):
                raise SpecError(f"malformed element text {text!r}")
            if m.group(2) is None:
                j, c = 0, int(m.group(1))
            else:
                j = int(m.group(3)) if m.group(3) else 1
                c = int(m.group(1)) if m.group(1) else 1
            if j >= self.u or not 1 <= c < self.p:
                raise SpecError(f"term {term!r} not reduced for GF({self.size})")
            if j in seen:
                raise SpecError(f"repeated power x^{j} in {text!r}")
            seen.add(j)
            coeffs[j] = c
        return self.encode(coeffs)

    def parse(self, text: str) -> "FieldElement":
        return self.element(self.parse_code(text))

    # -- identity ----------------------------------------------------------

    def descriptor(self) -> dict:
        return {"gf": {"p": self.p, "u": self.u, "modulus": list(self.modulus)}}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Field)
            and (self.p, self.u, self.modulus) == (other.p, other.u, other.modulus)
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Field(p={self.p}, u={self.u})"


@dataclass(frozen=True)
class FieldElement:
    """An element of a Field, immutable and hashable."""

    field: Field
    code: int

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement) or other.field != self.field:
            raise SpecError("operands belong to different fields")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.add_codes(self.code, other.code))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.sub_codes(self.code, other.code))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, self.field.neg_code(self.code))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.mul_codes(self.code, other.code))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv_code(self.code))

    def __bool__(self) -> bool:
        return self.code != 0

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.code)

    def text(self) -> str:
        return self.field.text_code(self.code)

    def __repr__(self) -> str:
        return f"<{self.text()} in GF({self.field.size})>"
