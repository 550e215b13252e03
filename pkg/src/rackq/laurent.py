"""Integer Laurent polynomials and the Alexander quandle structure on
them: x * y = t*x + (1-t)*y, with inverse the same formula in 1/t.

Includes coset relations of principal submodules (membership decided by
exact polynomial division) and a parity-shift relation that respects the
primary operation although it is not the coset relation of any single
difference set: the allowed difference of a pair depends on the parity
of the left element's coefficient sum.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tables import PRIMARY, INVERSE

POLY_RING = "poly"        # multipliers from Z[t]
LAURENT_RING = "laurent"  # multipliers from Z[t, 1/t]


@dataclass(frozen=True)
class LaurentPoly:
    """Finite integer combination of powers t^e, e in Z, stored as sorted
    (exponent, coefficient) pairs with no zero coefficients."""

    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        raw = self.terms.items() if isinstance(self.terms, dict) else self.terms
        acc: dict[int, int] = {}
        for e, c in raw:
            acc[e] = acc.get(e, 0) + c
        object.__setattr__(
            self, "terms", tuple(sorted((e, c) for e, c in acc.items() if c != 0))
        )

    @classmethod
    def _from_sorted(cls, terms: tuple) -> "LaurentPoly":
        # Fast path for arithmetic: terms already sorted with no zeros.
        obj = object.__new__(cls)
        object.__setattr__(obj, "terms", terms)
        return obj

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def t(cls, e: int = 1) -> "LaurentPoly":
        return cls({e: 1})

    def coeff(self, e: int) -> int:
        for exp, c in self.terms:
            if exp == e:
                return c
        return 0

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def min_exp(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no valuation")
        return self.terms[0][0]

    @property
    def max_exp(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return self.terms[-1][0]

    def shifted(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly._from_sorted(tuple((e + k, c) for e, c in self.terms))

    def _merge(self, other: "LaurentPoly", sign: int) -> "LaurentPoly":
        # Linear merge of two sorted term lists.
        a, b = self.terms, other.terms
        i = j = 0
        out = []
        while i < len(a) and j < len(b):
            ea, ca = a[i]
            eb, cb = b[j]
            if ea < eb:
                out.append((ea, ca))
                i += 1
            elif ea > eb:
                out.append((eb, sign * cb))
                j += 1
            else:
                c = ca + sign * cb
                if c:
                    out.append((ea, c))
                i += 1
                j += 1
        out.extend(a[i:])
        out.extend((e, sign * c) for e, c in b[j:])
        return LaurentPoly._from_sorted(tuple(out))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self._merge(other, 1)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self._merge(other, -1)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._from_sorted(tuple((e, -c) for e, c in self.terms))

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                key = e1 + e2
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentPoly(out)

    def __str__(self) -> str:
        return format_laurent(self)


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
T = LaurentPoly.t(1)
T_INV = LaurentPoly.t(-1)


def eval_at_one(p: LaurentPoly) -> int:
    """Sum of coefficients (the value at t = 1)."""
    total = 0
    for _, c in p.terms:
        total += c
    return total


def in_poly_ring(p: LaurentPoly) -> bool:
    """No negative exponents (zero counts as in Z[t])."""
    terms = p.terms
    return not terms or terms[0][0] >= 0


def alexander_op(f: LaurentPoly, g: LaurentPoly, side: str = PRIMARY) -> LaurentPoly:
    """t*f + (1-t)*g, or the inverse-side formula with 1/t for t."""
    if side == PRIMARY:
        t = T
    elif side == INVERSE:
        t = T_INV
    else:
        raise ValueError(f"side must be {PRIMARY!r} or {INVERSE!r}")
    return t * f + (ONE - t) * g


# ---------------------------------------------------------------------------
# the parity-shift relation and its difference sets

def parity_shift_relation(f: LaurentPoly, g: LaurentPoly) -> bool:
    """f ~ g iff g - f lies in Z[t] and its coefficient sum is 0 or 1
    when f's coefficient sum is even, 0 or -1 when odd."""
    d = g - f
    if not in_poly_ring(d):
        return False
    allowed = (0, 1) if eval_at_one(f) % 2 == 0 else (0, -1)
    return eval_at_one(d) in allowed


def in_common_difference_set(p: LaurentPoly) -> bool:
    """Membership in the set of differences allowed at every element:
    polynomials in Z[t] with coefficient sum 0."""
    return in_poly_ring(p) and eval_at_one(p) == 0


def in_difference_set(f: LaurentPoly, d: LaurentPoly) -> bool:
    """Membership in the difference set at f: the common set, shifted up
    by the constant 1 when f has even coefficient sum and down by 1 when
    odd.  Agrees with parity_shift_relation(f, f + d)."""
    if eval_at_one(f) % 2 == 0:
        return in_common_difference_set(d) or in_common_difference_set(d - ONE)
    return in_common_difference_set(d) or in_common_difference_set(d + ONE)


# ---------------------------------------------------------------------------
# principal submodules and their coset relations

@dataclass(frozen=True)
class PrincipalSubmodule:
    """Multiples of a fixed nonzero generator by Z[t] (ring="poly") or by
    Z[t, 1/t] (ring="laurent")."""

    generator: LaurentPoly
    ring: str = POLY_RING

    def __post_init__(self):
        if self.generator.is_zero:
            raise ValueError("generator must be nonzero")
        if self.ring not in (POLY_RING, LAURENT_RING):
            raise ValueError(f"ring must be {POLY_RING!r} or {LAURENT_RING!r}")

    def contains(self, d: LaurentPoly) -> bool:
        if d.is_zero:
            return True
        h0 = self.generator.shifted(-self.generator.min_exp)
        if self.ring == LAURENT_RING:
            # Units +-t^k are absorbed by normalising both to valuation 0.
            return _exact_divides(d.shifted(-d.min_exp), h0)
        shifted = d.shifted(-self.generator.min_exp)
        if shifted.min_exp < 0:
            return False
        return _exact_divides(shifted, h0)

    def sample_member(self, rng) -> LaurentPoly:
        """Generator times a random ring element (coefficients in
        [-3, 3]; exponents [0, 4] for Z[t], [-2, 2] for Laurent)."""
        lo = 0 if self.ring == POLY_RING else -2
        hi = 4 if self.ring == POLY_RING else 2
        return self.generator * random_laurent(rng, lo, hi)


def _exact_divides(num: LaurentPoly, den: LaurentPoly) -> bool:
    """Whether den divides num in Z[t] with an integer quotient; both
    arguments have valuation 0, den nonzero."""
    if num.is_zero:
        return True
    width = num.max_exp + 1
    rem = [0] * width
    for e, c in num.terms:
        rem[e] = c
    dense_den = [0] * (den.max_exp + 1)
    for e, c in den.terms:
        dense_den[e] = c
    deg = len(dense_den) - 1
    lead = dense_den[-1]
    for top in range(width - 1, deg - 1, -1):
        c = rem[top]
        if c == 0:
            continue
        if c % lead:
            return False
        q = c // lead
        off = top - deg
        for i, dc in enumerate(dense_den):
            rem[off + i] -= q * dc
    return all(c == 0 for c in rem)


def submodule_relation(m: PrincipalSubmodule, f: LaurentPoly, g: LaurentPoly) -> bool:
    """Coset relation of the submodule: f ~ g iff g - f is a multiple of
    the generator within the chosen ring."""
    return m.contains(g - f)


# ---------------------------------------------------------------------------
# text syntax and sampling

def parse_laurent(text: str) -> LaurentPoly:
    """Parse a signed monomial list such as "t^2 - 3 + 2t^-1"."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial literal")
    terms: dict[int, int] = {}
    i = 0
    while i < len(s):
        sign = 1
        if s[i] in "+-":
            sign = -1 if s[i] == "-" else 1
            i += 1
        j = i
        while j < len(s) and s[j].isdigit():
            j += 1
        has_coeff = j > i
        coeff = int(s[i:j]) if has_coeff else 1
        i = j
        if i < len(s) and s[i] == "t":
            i += 1
            exp = 1
            if i < len(s) and s[i] == "^":
                i += 1
                k = i + 1 if i < len(s) and s[i] in "+-" else i
                while k < len(s) and s[k].isdigit():
                    k += 1
                if k == i or (k == i + 1 and s[i] in "+-"):
                    raise ValueError(f"missing exponent in {text!r}")
                exp = int(s[i:k])
                i = k
        elif has_coeff:
            exp = 0
        else:
            raise ValueError(f"unexpected character {s[i]!r} in {text!r}")
        terms[exp] = terms.get(exp, 0) + sign * coeff
    return LaurentPoly(terms)


def format_laurent(p: LaurentPoly) -> str:
    """Inverse of parse_laurent; exact round-trip, highest exponent first."""
    if p.is_zero:
        return "0"
    chunks = []
    for e, c in sorted(p.terms, reverse=True):
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            var = "t" if e == 1 else f"t^{e}"
            body = var if mag == 1 else f"{mag}{var}"
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(chunks)


def random_laurent(rng, lo: int = -4, hi: int = 4, cmax: int = 3) -> LaurentPoly:
    """Coefficient uniform in [-cmax, cmax] for every exponent in [lo, hi]."""
    return LaurentPoly({e: rng.randint(-cmax, cmax) for e in range(lo, hi + 1)})


def random_relation_partner(rng, f: LaurentPoly) -> LaurentPoly:
    """Random g related to f under parity_shift_relation: add a multiple
    of t - 1 (always an allowed difference) and, half the time, the
    parity-dependent constant."""
    d = (T - ONE) * random_laurent(rng, 0, 4)
    if rng.random() < 0.5:
        d = d + LaurentPoly.constant(1 if eval_at_one(f) % 2 == 0 else -1)
    return f + d
