"""Group towers F_1 ⊂ ... ⊂ F_I with transversal decompositions and the
layer projections they induce.

Three chain kinds are provided:

* a field tower, where layer i holds the polynomials of degree < u_i inside
  GF(p^{u_I}) and the transversal T_i is the additive span of the monomials
  x^{u_{i-1}}, ..., x^{u_i - 1};
* a subfield tower (degrees dividing upward), where layer i is the genuine
  subfield GF(p^{u_i}) and T_i a canonical additive complement — the right
  structure when generator coefficients must multiply layers into themselves;
* an omega ring, where layer i holds formal sums
  psi_0 + psi_1*w + ... + psi_{i-1}*w^{i-1} with each psi_b drawn from a base
  group (Z_n or a Galois field), added component-wise, and T_i is the set of
  pure w^{i-1} terms.

In every kind each element of the top layer splits uniquely into one part per
transversal, and projecting onto layer i keeps the first i parts.  For field
towers and omega rings the canonical integer code (base-p digits, resp. mixed
radix over the base-group sizes) makes layer i exactly the codes below its
size; subfield layers are scattered code sets, still listed ascending.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import prod
from typing import Optional, Sequence, Union

from .errors import SpecError
from .galois import Field, FieldElement


class Zn:
    """Additive group of integers modulo n, used as an omega-ring base."""

    def __init__(self, n: int):
        if n < 1:
            raise SpecError(f"Z_n needs n >= 1, got {n}")
        self.n = n
        self.size = n

    def add_codes(self, a: int, b: int) -> int:
        return (a + b) % self.n

    def neg_code(self, a: int) -> int:
        return (-a) % self.n

    def sub_codes(self, a: int, b: int) -> int:
        return (a - b) % self.n

    def text_code(self, a: int) -> str:
        return str(a)

    def parse_code(self, text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise SpecError(f"malformed Z_{self.n} element {text!r}") from None
        if not 0 <= v < self.n:
            raise SpecError(f"{v} out of range for Z_{self.n}")
        return v

    def descriptor(self) -> dict:
        return {"zn": self.n}

    def __eq__(self, other) -> bool:
        return isinstance(other, Zn) and other.n == self.n

    def __hash__(self) -> int:
        return hash(("zn", self.n))

    def __repr__(self) -> str:
        return f"Zn({self.n})"


BaseGroup = Union[Zn, Field]


def base_from_descriptor(d: dict) -> BaseGroup:
    if "zn" in d:
        return Zn(d["zn"])
    if "gf" in d:
        g = d["gf"]
        return Field(g["p"], g["u"], g.get("modulus"))
    raise SpecError(f"unknown base group descriptor {d!r}")


@dataclass(frozen=True)
class OmegaElement:
    """An omega-ring element; parts[b] is the code of the w^b coefficient."""

    ring: "OmegaRingChain"
    parts: tuple[int, ...]

    def _check(self, other: "OmegaElement") -> None:
        if not isinstance(other, OmegaElement) or other.ring != self.ring:
            raise SpecError("operands belong to different omega rings")

    def __add__(self, other: "OmegaElement") -> "OmegaElement":
        self._check(other)
        parts = tuple(
            base.add_codes(a, b)
            for base, a, b in zip(self.ring.bases, self.parts, other.parts)
        )
        return OmegaElement(self.ring, parts)

    def __neg__(self) -> "OmegaElement":
        return OmegaElement(
            self.ring,
            tuple(base.neg_code(a) for base, a in zip(self.ring.bases, self.parts)),
        )

    def __sub__(self, other: "OmegaElement") -> "OmegaElement":
        self._check(other)
        return self + (-other)

    def __bool__(self) -> bool:
        return any(self.parts)

    @property
    def code(self) -> int:
        c, scale = 0, 1
        for base, part in zip(self.ring.bases, self.parts):
            c += part * scale
            scale *= base.size
        return c

    def text(self) -> str:
        return self.ring.text(self)

    def __repr__(self) -> str:
        return f"<{self.text()} in {self.ring!r}>"


GroupElement = Union[FieldElement, OmegaElement]


class GroupChain:
    """Shared behavior of the chain kinds.

    Subclasses provide element construction and transversals; sizes[i-1] is
    |F_i| and the top layer has index I = layers.  Decomposition and
    projection have a generic table-driven implementation here that the
    digit-structured kinds override with direct formulas.
    """

    kind: str
    sizes: tuple[int, ...]

    @property
    def layers(self) -> int:
        return len(self.sizes)

    @property
    def top_size(self) -> int:
        return self.sizes[-1]

    def zero(self) -> GroupElement:
        return self.element_from_code(0)

    def element_from_code(self, code: int) -> GroupElement:
        raise NotImplementedError

    def transversal(self, i: int) -> list[GroupElement]:
        raise NotImplementedError

    def text(self, el: GroupElement) -> str:
        raise NotImplementedError

    def parse(self, text: str) -> GroupElement:
        raise NotImplementedError

    def descriptor(self) -> dict:
        raise NotImplementedError

    def _check_layer(self, i: int) -> None:
        if not 1 <= i <= self.layers:
            raise SpecError(f"layer {i} out of range 1..{self.layers}")

    def _parts_table(self) -> dict[int, tuple[int, ...]]:
        """Code of every top element -> codes of its transversal parts.

        Built once from the direct-sum structure: summing one element per
        transversal reaches every top element exactly once.
        """
        cached = getattr(self, "_parts_cache", None)
        if cached is not None:
            return cached
        table: dict[int, tuple[int, ...]] = {}
        combos = [((), self.zero())]
        for i in range(1, self.layers + 1):
            combos = [
                (parts + (t.code,), acc + t)
                for parts, acc in combos
                for t in self.transversal(i)
            ]
        for parts, total in combos:
            if total.code in table:
                raise SpecError("transversals do not form a direct sum")
            table[total.code] = parts
        if len(table) != self.top_size:
            raise SpecError("transversal sums do not cover the top layer")
        self._parts_cache = table
        return table

    def decompose(self, el: GroupElement) -> tuple[GroupElement, ...]:
        """Split el into its unique per-transversal parts (they sum to el)."""
        parts = self._parts_table().get(el.code)
        if parts is None:
            raise SpecError("element outside the top layer")
        return tuple(self.element_from_code(c) for c in parts)

    def project(self, i: int, el: GroupElement) -> GroupElement:
        """Sum of the first i parts of el; the identity on layer i."""
        self._check_layer(i)
        parts = self.decompose(el)
        acc = parts[0]
        for p in parts[1:i]:
            acc = acc + p
        return acc

    def layer_elements(self, i: int) -> list[GroupElement]:
        """Layer i in ascending canonical code order (zero first)."""
        self._check_layer(i)
        return [self.element_from_code(c) for c in range(self.sizes[i - 1])]

    def contains(self, el: GroupElement, i: int) -> bool:
        self._check_layer(i)
        return el.code < self.sizes[i - 1]

    def layer_of(self, el: GroupElement) -> int:
        """Smallest layer containing el."""
        for i in range(1, self.layers + 1):
            if self.contains(el, i):
                return i
        raise SpecError("element outside the top layer")

    def enumerate_ordered(self, order: str) -> list[GroupElement]:
        """Kronecker-sum enumeration of the top layer.

        "inner-first" nests T_1 ... T_I with the last transversal varying
        fastest; "outer-first" reverses the nesting so T_1 varies fastest
        (for field towers and omega rings that is ascending code order).
        """
        blocks = [self.transversal(i) for i in range(1, self.layers + 1)]
        if order == "outer-first":
            blocks.reverse()
        elif order != "inner-first":
            raise SpecError(f"unknown enumeration order {order!r}")
        out = [self.zero()]
        for block in blocks:
            out = [a + b for a in out for b in block]
        return out

    def projection_table(self, i: int) -> list[int]:
        """Code-level table: entry c is the code of the layer-i projection."""
        return [
            self.project(i, self.element_from_code(c)).code
            for c in range(self.top_size)
        ]

    def projection_map(self, i: int) -> dict[GroupElement, GroupElement]:
        return {
            el: self.project(i, el)
            for el in (self.element_from_code(c) for c in range(self.top_size))
        }


class FieldTowerChain(GroupChain):
    """Additive tower of degree-filtered subgroups inside one Galois field."""

    kind = "field-tower"

    def __init__(self, p: int, u_chain: Sequence[int], modulus: Optional[Sequence[int]] = None):
        u_chain = tuple(int(u) for u in u_chain)
        if not u_chain or any(b <= a for a, b in zip(u_chain, u_chain[1:])):
            raise SpecError(f"u_chain must be strictly increasing, got {list(u_chain)}")
        if u_chain[0] < 1:
            raise SpecError("u_chain entries must be positive")
        self.field = Field(p, u_chain[-1], modulus)
        self.u_chain = u_chain
        self.sizes = tuple(p**u for u in u_chain)

    @property
    def p(self) -> int:
        return self.field.p

    def element_from_code(self, code: int) -> FieldElement:
        return self.field.element(code)

    def _check_member(self, el: GroupElement) -> None:
        if not isinstance(el, FieldElement) or el.field != self.field:
            raise SpecError("element does not belong to this chain's field")

    def transversal(self, i: int) -> list[FieldElement]:
        self._check_layer(i)
        lo = self.u_chain[i - 2] if i > 1 else 0
        hi = self.u_chain[i - 1]
        base = self.p**lo
        out = []
        for t in range(self.p ** (hi - lo)):
            code, scale, tt = 0, base, t
            while tt:
                code += (tt % self.p) * scale
                scale *= self.p
                tt //= self.p
            out.append(self.field.element(code))
        return out

    def decompose(self, el: FieldElement) -> tuple[FieldElement, ...]:
        self._check_member(el)
        parts = []
        for i in range(1, self.layers + 1):
            lo = self.sizes[i - 2] if i > 1 else 1
            hi = self.sizes[i - 1]
            parts.append(self.field.element(el.code % hi - el.code % lo))
        return tuple(parts)

    def project(self, i: int, el: FieldElement) -> FieldElement:
        self._check_layer(i)
        self._check_member(el)
        return self.field.element(el.code % self.sizes[i - 1])

    def text(self, el: FieldElement) -> str:
        self._check_member(el)
        return el.text()

    def parse(self, text: str) -> FieldElement:
        return self.field.parse(text)

    def descriptor(self) -> dict:
        return {
            "kind": self.kind,
            "p": self.p,
            "u_chain": list(self.u_chain),
            "modulus": list(self.field.modulus),
        }

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldTowerChain)
            and other.field == self.field
            and other.u_chain == self.u_chain
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.field, self.u_chain))

    def __repr__(self) -> str:
        return f"FieldTowerChain(p={self.p}, u_chain={list(self.u_chain)})"


class SubfieldTowerChain(GroupChain):
    """Tower of genuine subfields GF(p^{u_1}) ⊂ ... ⊂ GF(p^{u_I}).

    Needs u_i | u_{i+1} so every layer exists as a subfield (the fixed points
    of the matching Frobenius power).  Layers are multiplicatively closed, so
    generator-matrix products with layer-1 coefficients stay inside each
    layer — which the degree-filtered tower does not guarantee.  Transversals
    are canonical greedy complements: extend the previous layer's basis with
    the smallest-code elements that are independent of it.
    """

    kind = "subfield-tower"

    def __init__(self, p: int, u_chain: Sequence[int], modulus: Optional[Sequence[int]] = None):
        u_chain = tuple(int(u) for u in u_chain)
        if not u_chain or any(b <= a for a, b in zip(u_chain, u_chain[1:])):
            raise SpecError(f"u_chain must be strictly increasing, got {list(u_chain)}")
        if u_chain[0] < 1:
            raise SpecError("u_chain entries must be positive")
        for a, b in zip(u_chain, u_chain[1:]):
            if b % a:
                raise SpecError(
                    f"subfield tower needs each degree to divide the next, got {list(u_chain)}"
                )
        self.field = Field(p, u_chain[-1], modulus)
        self.u_chain = u_chain
        self.sizes = tuple(p**u for u in u_chain)
        self._layer_codes = [self._subfield_codes(u) for u in u_chain]
        self._transversals = self._complement_transversals()

    @property
    def p(self) -> int:
        return self.field.p

    def _subfield_codes(self, u: int) -> list[int]:
        q = self.p**u
        codes = [c for c in range(self.field.size) if self.field.pow_code(c, q) == c]
        if len(codes) != q:
            raise AssertionError(f"subfield of order {q} has {len(codes)} elements")
        return codes

    def _complement_transversals(self) -> list[list[int]]:
        p = self.p
        out = []
        prev_span = {0}
        for i, layer in enumerate(self._layer_codes):
            layer_set = set(layer)
            basis: list[int] = []
            span = set(prev_span)
            for cand in layer:
                if cand in span:
                    continue
                basis.append(cand)
                span = {
                    self.field.add_codes(a, m)
                    for a in span
                    for m in self._multiples(cand)
                }
                if len(span) == len(layer_set):
                    break
            t_span = {0}
            for b in basis:
                t_span = {
                    self.field.add_codes(a, m) for a in t_span for m in self._multiples(b)
                }
            out.append(sorted(t_span))
            prev_span = layer_set
        return out

    def _multiples(self, code: int) -> list[int]:
        vals, acc = [0], 0
        for _ in range(self.p - 1):
            acc = self.field.add_codes(acc, code)
            vals.append(acc)
        return vals

    def element_from_code(self, code: int) -> FieldElement:
        return self.field.element(code)

    def _check_member(self, el: GroupElement) -> None:
        if not isinstance(el, FieldElement) or el.field != self.field:
            raise SpecError("element does not belong to this chain's field")

    def layer_elements(self, i: int) -> list[FieldElement]:
        self._check_layer(i)
        return [self.field.element(c) for c in self._layer_codes[i - 1]]

    def contains(self, el: GroupElement, i: int) -> bool:
        self._check_layer(i)
        self._check_member(el)
        return el.code in set(self._layer_codes[i - 1])

    def transversal(self, i: int) -> list[FieldElement]:
        self._check_layer(i)
        return [self.field.element(c) for c in self._transversals[i - 1]]

    def text(self, el: FieldElement) -> str:
        self._check_member(el)
        return el.text()

    def parse(self, text: str) -> FieldElement:
        return self.field.parse(text)

    def descriptor(self) -> dict:
        return {
            "kind": self.kind,
            "p": self.p,
            "u_chain": list(self.u_chain),
            "modulus": list(self.field.modulus),
        }

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SubfieldTowerChain)
            and other.field == self.field
            and other.u_chain == self.u_chain
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.field, self.u_chain))

    def __repr__(self) -> str:
        return f"SubfieldTowerChain(p={self.p}, u_chain={list(self.u_chain)})"


_OMEGA_TERM_RE = re.compile(r"^(?:\(([^()]*)\)|([^()w]*))w(\d*)$")


class OmegaRingChain(GroupChain):
    """Tower of truncated formal sums over base groups in the symbol w."""

    kind = "omega"

    def __init__(self, bases: Sequence[BaseGroup]):
        bases = tuple(bases)
        if not bases:
            raise SpecError("omega ring needs at least one base group")
        for b in bases:
            if not isinstance(b, (Zn, Field)):
                raise SpecError(f"unsupported base group {b!r}")
        self.bases = bases
        self.sizes = tuple(
            prod(b.size for b in bases[:i]) for i in range(1, len(bases) + 1)
        )

    def element(self, parts: Sequence[int]) -> OmegaElement:
        parts = tuple(parts)
        if len(parts) != len(self.bases):
            raise SpecError("wrong number of components")
        for base, part in zip(self.bases, parts):
            if not 0 <= part < base.size:
                raise SpecError(f"component {part} out of range for {base!r}")
        return OmegaElement(self, parts)

    def element_from_code(self, code: int) -> OmegaElement:
        if not 0 <= code < self.top_size:
            raise SpecError(f"code {code} out of range")
        parts = []
        for base in self.bases:
            parts.append(code % base.size)
            code //= base.size
        return OmegaElement(self, tuple(parts))

    def _check_member(self, el: GroupElement) -> None:
        if not isinstance(el, OmegaElement) or el.ring != self:
            raise SpecError("element does not belong to this omega ring")

    def transversal(self, i: int) -> list[OmegaElement]:
        self._check_layer(i)
        out = []
        for c in range(self.bases[i - 1].size):
            parts = [0] * len(self.bases)
            parts[i - 1] = c
            out.append(OmegaElement(self, tuple(parts)))
        return out

    def decompose(self, el: OmegaElement) -> tuple[OmegaElement, ...]:
        self._check_member(el)
        out = []
        for b in range(len(self.bases)):
            parts = [0] * len(self.bases)
            parts[b] = el.parts[b]
            out.append(OmegaElement(self, tuple(parts)))
        return tuple(out)

    def project(self, i: int, el: OmegaElement) -> OmegaElement:
        self._check_layer(i)
        self._check_member(el)
        return OmegaElement(self, el.parts[:i] + (0,) * (len(self.bases) - i))

    # -- text form: psi_0 first, then psi_b * w^b with ascending b ---------

    def text(self, el: OmegaElement) -> str:
        self._check_member(el)
        terms = []
        if el.parts[0]:
            terms.append(self.bases[0].text_code(el.parts[0]))
        for b in range(1, len(self.bases)):
            c = el.parts[b]
            if not c:
                continue
            unit = "w" if b == 1 else f"w{b}"
            coeff = self.bases[b].text_code(c)
            if coeff == "1":
                terms.append(unit)
            elif "+" in coeff:
                terms.append(f"({coeff}){unit}")
            else:
                terms.append(f"{coeff}{unit}")
        return "+".join(terms) if terms else "0"

    def parse(self, text: str) -> OmegaElement:
        s = text.replace(" ", "")
        parts = [0] * len(self.bases)
        if s == "0":
            return OmegaElement(self, tuple(parts))
        # split on '+' outside parentheses
        tokens, depth, cur = [], 0, ""
        for ch in s:
            if ch == "+" and depth == 0:
                tokens.append(cur)
                cur = ""
            else:
                depth += ch == "("
                depth -= ch == ")"
                cur += ch
        tokens.append(cur)
        psi0_tokens = []
        seen = set()
        for tok in tokens:
            if "w" not in tok:
                psi0_tokens.append(tok)
                continue
            m = _OMEGA_TERM_RE.match(tok)
            if not m:
                raise SpecError(f"malformed omega term {tok!r}")
            coeff = m.group(1) if m.group(1) is not None else m.group(2)
            b = int(m.group(3)) if m.group(3) else 1
            if not 1 <= b < len(self.bases):
                raise SpecError(f"w power {b} out of range in {text!r}")
            if b in seen:
                raise SpecError(f"repeated w power in {text!r}")
            seen.add(b)
            parts[b] = self.bases[b].parse_code(coeff if coeff else "1")
        if psi0_tokens:
            parts[0] = self.bases[0].parse_code("+".join(psi0_tokens))
        return OmegaElement(self, tuple(parts))

    def descriptor(self) -> dict:
        return {"kind": self.kind, "bases": [b.descriptor() for b in self.bases]}

    def __eq__(self, other) -> bool:
        return isinstance(other, OmegaRingChain) and other.bases == self.bases

    def __hash__(self) -> int:
        return hash((self.kind, self.bases))

    def __repr__(self) -> str:
        return f"OmegaRingChain({list(self.bases)!r})"


def chain_field_tower(
    p: int, u_chain: Sequence[int], modulus: Optional[Sequence[int]] = None
) -> FieldTowerChain:
    return FieldTowerChain(p, u_chain, modulus)


def chain_subfield_tower(
    p: int, u_chain: Sequence[int], modulus: Optional[Sequence[int]] = None
) -> SubfieldTowerChain:
    return SubfieldTowerChain(p, u_chain, modulus)


def chain_omega_ring(bases: Sequence[BaseGroup]) -> OmegaRingChain:
    return OmegaRingChain(bases)


def chain_from_descriptor(d: dict) -> GroupChain:
    kind = d.get("kind")
    if kind == "field-tower":
        return FieldTowerChain(d["p"], d["u_chain"], d.get("modulus"))
    if kind == "subfield-tower":
        return SubfieldTowerChain(d["p"], d["u_chain"], d.get("modulus"))
    if kind == "omega":
        return OmegaRingChain([base_from_descriptor(b) for b in d["bases"]])
    raise SpecError(f"unknown chain kind {kind!r}")
