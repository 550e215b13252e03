"""Bi-infinite binary sequences under shifts: a rack and a quandle built
on them, each carrying an equivalence relation that respects exactly one
of the two rack operations.

Only sequences that are eventually constant on both sides are
represented: a left tail bit, a finite word starting at some index, and
a right tail bit.  Every witness needed here lives in that subclass, and
on it both relations below and both operations are exactly decidable.

The rack is the constant action of the left shift (seq_rack_op).  The
quandle (seq_quandle_op) shifts its first argument only when the two
arguments are in different shift-equivalence classes, which makes the
operation idempotent.  In both structures, agreement on all indices >= 0
(agree_nonneg) respects the primary operation but not the inverse one;
the witnesses for the failure are produced by half_congruence_witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tables import PRIMARY, INVERSE

LEFT = "left"
RIGHT = "right"


@dataclass(frozen=True)
class BiSeq:
    """Eventually constant sequence over {0,1} indexed by the integers.

    bit i is left_tail for i < start, word[i - start] inside the word,
    and right_tail from the end of the word on.  Construction
    canonicalises: the word never begins with the left tail bit nor ends
    with the right tail bit, and a constant sequence has start 0.  Two
    equal sequences therefore compare equal structurally.
    """

    left_tail: int
    start: int
    word: tuple[int, ...]
    right_tail: int

    def __post_init__(self):
        if self.left_tail not in (0, 1) or self.right_tail not in (0, 1):
            raise ValueError("tail bits must be 0 or 1")
        if any(b not in (0, 1) for b in self.word):
            raise ValueError("word bits must be 0 or 1")
        word = list(self.word)
        start = self.start
        while word and word[0] == self.left_tail:
            word.pop(0)
            start += 1
        while word and word[-1] == self.right_tail:
            word.pop()
        if not word and self.left_tail == self.right_tail:
            start = 0
        object.__setattr__(self, "word", tuple(word))
        object.__setattr__(self, "start", start)

    @property
    def end(self) -> int:
        """First index at or after the word that is in the right tail."""
        return self.start + len(self.word)

    def bit_at(self, i: int) -> int:
        if i < self.start:
            return self.left_tail
        if i < self.end:
            return self.word[i - self.start]
        return self.right_tail


def shift(a: BiSeq, direction: str) -> BiSeq:
    """Left shift moves every bit one index down: (shift left a)_i = a_{i+1}."""
    if direction == LEFT:
        return BiSeq(a.left_tail, a.start - 1, a.word, a.right_tail)
    if direction == RIGHT:
        return BiSeq(a.left_tail, a.start + 1, a.word, a.right_tail)
    raise ValueError(f"direction must be {LEFT!r} or {RIGHT!r}")


def shift_by(a: BiSeq, k: int) -> BiSeq:
    """k-fold left shift; negative k shifts right."""
    return BiSeq(a.left_tail, a.start - k, a.word, a.right_tail)


def agree_nonneg(a: BiSeq, b: BiSeq) -> bool:
    """Whether a_i = b_i for every i >= 0.

    Decidable on this subclass: beyond both words the sequences sit in
    their right tails, so it is enough to compare the window [0, end)
    plus the tail bits.
    """
    hi = max(0, a.end, b.end)
    if a.right_tail != b.right_tail:
        return False
    return all(a.bit_at(i) == b.bit_at(i) for i in range(hi))


def shift_equivalent(a: BiSeq, b: BiSeq) -> bool:
    """Whether some shift of a eventually agrees with b: there exist
    integers j, k with a_i = b_{i+j} for all i >= k.

    On eventually constant sequences this reduces to equality of the
    right tail bits.  If the tails differ then for any j and all large
    i we have a_i = a.right_tail != b.right_tail = b_{i+j}, so no (j, k)
    works.  If the tails agree, take j = 0 and k past the end of both
    words; from there on both sequences are constant at the common tail.
    The tests re-check this reduction against the two-quantifier
    definition by bounded search over j, k in [-16, 16].
    """
    return a.right_tail == b.right_tail


def seq_rack_op(a: BiSeq, b: BiSeq, side: str = PRIMARY) -> BiSeq:
    """Constant action rack of the left shift: the second argument is
    ignored and a is shifted left (primary) or right (inverse)."""
    if side == PRIMARY:
        return shift(a, LEFT)
    if side == INVERSE:
        return shift(a, RIGHT)
    raise ValueError(f"side must be {PRIMARY!r} or {INVERSE!r}")


def seq_quandle_op(a: BiSeq, b: BiSeq, side: str = PRIMARY) -> BiSeq:
    """Quandle operation: fix a when it is shift-equivalent to b, else
    shift it left (primary) or right (inverse)."""
    if side not in (PRIMARY, INVERSE):
        raise ValueError(f"side must be {PRIMARY!r} or {INVERSE!r}")
    if shift_equivalent(a, b):
        return a
    return shift(a, LEFT if side == PRIMARY else RIGHT)


@dataclass(frozen=True)
class Witnesses:
    """Named sequences exhibiting the half congruences.

    spike and step agree at all indices >= 0 but their right shifts do
    not, and in the quandle, acting on each by ones (inverse side) is
    exactly that right shift.  zeros and spike_left are the analogous
    pair for the plain shift rack.
    """

    spike: BiSeq        # 1 at index 0 only
    step: BiSeq         # 1 exactly at indices <= 0
    ones: BiSeq         # constant 1
    zeros: BiSeq        # constant 0
    spike_left: BiSeq   # 1 at index -1 only


def half_congruence_witnesses() -> Witnesses:
    return Witnesses(
        spike=BiSeq(0, 0, (1,), 0),
        step=BiSeq(1, 1, (), 0),
        ones=BiSeq(1, 0, (), 1),
        zeros=BiSeq(0, 0, (), 0),
        spike_left=BiSeq(0, -1, (1,), 0),
    )


# ---------------------------------------------------------------------------
# finitely presented quandle on normal forms

@dataclass(frozen=True)
class NormalForm:
    """Element a^k, b^k or c of the quandle presented by generators
    a, b, c and relations a*b = a, b*a = b, c*a = c, c*b = c.

    c is the only generator that moves anything: acting by c on the
    right steps the power (x^k * c = x^(k+1), x^k *' c = x^(k-1));
    everything else fixes its left argument.  x^k abbreviates the image
    of x under the k-th power of the symmetry at c.
    """

    gen: str
    power: int = 0

    def __post_init__(self):
        if self.gen not in ("a", "b", "c"):
            raise ValueError("generator must be 'a', 'b' or 'c'")
        if self.gen == "c" and self.power != 0:
            raise ValueError("c carries no power")


def normal_form_op(u: NormalForm, v: NormalForm, side: str = PRIMARY) -> NormalForm:
    """Multiplication on normal forms."""
    if side not in (PRIMARY, INVERSE):
        raise ValueError(f"side must be {PRIMARY!r} or {INVERSE!r}")
    if u.gen == "c":
        return u
    if v.gen == "c":
        return NormalForm(u.gen, u.power + (1 if side == PRIMARY else -1))
    return u


def embed_normal_form(u: NormalForm) -> BiSeq:
    """Embed into the sequence quandle: a^k and b^k map to the k-fold
    left shifts of spike and step, c maps to ones.  A homomorphism for
    both operations, injective on any bounded power range."""
    w = half_congruence_witnesses()
    if u.gen == "a":
        return shift_by(w.spike, u.power)
    if u.gen == "b":
        return shift_by(w.step, u.power)
    return w.ones


# ---------------------------------------------------------------------------
# text literals and sampling

def parse_biseq(text: str) -> BiSeq:
    """Parse "L<bit>:<start>:<word>:R<bit>" (start may be empty; the
    3-field form "L<bit>:<word>:R<bit>" means start 0).  The result is
    canonical, so e.g. "L1:0:1:R0" collapses its word into the left tail."""
    parts = text.split(":")
    if len(parts) == 4:
        left_s, start_s, word_s, right_s = parts
    elif len(parts) == 3:
        left_s, word_s, right_s = parts
        start_s = ""
    else:
        raise ValueError(f"malformed sequence literal: {text!r}")
    if len(left_s) != 2 or left_s[0] != "L" or left_s[1] not in "01":
        raise ValueError(f"malformed left tail in {text!r}")
    if len(right_s) != 2 or right_s[0] != "R" or right_s[1] not in "01":
        raise ValueError(f"malformed right tail in {text!r}")
    if any(ch not in "01" for ch in word_s):
        raise ValueError(f"word must be over 0/1 in {text!r}")
    try:
        start = int(start_s) if start_s else 0
    except ValueError:
        raise ValueError(f"malformed start index in {text!r}")
    return BiSeq(int(left_s[1]), start, tuple(int(ch) for ch in word_s), int(right_s[1]))


def format_biseq(a: BiSeq) -> str:
    if not a.word and a.start == 0:
        return f"L{a.left_tail}::R{a.right_tail}"
    word = "".join(str(b) for b in a.word)
    return f"L{a.left_tail}:{a.start}:{word}:R{a.right_tail}"


def random_biseq(rng, max_word: int = 8, max_span: int = 8) -> BiSeq:
    """Canonical random sequence: uniform tail bits, a uniform word of
    length 0..max_word, start uniform in [-max_span, max_span].  Used by
    every seeded property suite; keep the distribution stable."""
    word = tuple(rng.randint(0, 1) for _ in range(rng.randint(0, max_word)))
    return BiSeq(
        rng.randint(0, 1), rng.randint(-max_span, max_span), word, rng.randint(0, 1)
    )


def random_agree_partner(rng, a: BiSeq, depth: int = 10) -> BiSeq:
    """Random b agreeing with a at all indices >= 0, built by rewriting
    the bits at indices in [-depth, -1] and possibly the left tail."""
    lo = min(-depth, a.start)
    bits = [a.bit_at(i) for i in range(lo, max(a.end, 1))]
    for off in range(-lo):
        if rng.random() < 0.5:
            bits[off] = rng.randint(0, 1)
    return BiSeq(rng.randint(0, 1), lo, tuple(bits), a.right_tail)
