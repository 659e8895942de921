"""The affine Weyl group as a semidirect product of translations and W0.

Elements are pairs (lam, w): an integer translation vector in coroot
coordinates and a finite Weyl element acting on the coroot lattice by an
integer matrix.  The representation is unique, so equality of elements is
equality of these pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lattice import (
    Mat,
    Vec,
    mat_identity,
    mat_inverse_unimodular,
    mat_mul,
    mat_vec,
    vec_add,
    vec_neg,
)
from .rootdata import RootDatum

Word = tuple[int, ...]


@dataclass(frozen=True)
class FiniteWeylElement:
    tag: str
    matrix: Mat
    id: int = field(compare=False)


@dataclass(frozen=True)
class AffineElement:
    lam: Vec
    w: FiniteWeylElement

    @property
    def tag(self) -> str:
        return self.w.tag

    @property
    def is_identity(self) -> bool:
        return not any(self.lam) and self.w.id == 0


class ParseError(ValueError):
    """Malformed element input; position is a 0-based offset into the input."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


def _enumerate_weyl(datum: RootDatum) -> tuple[list[Mat], list[Word]]:
    """Breadth-first closure of W0 under right multiplication.

    Ties break on the smaller generator index, then discovery order, so ids
    and the stored words are stable.  Entry 0 is the identity.
    """
    gens = [(i, datum.generators[i].matrix) for i in datum.finite_generators]
    ident = mat_identity(datum.rank)
    elements: list[Mat] = [ident]
    words: list[Word] = [()]
    seen = {ident: 0}
    qi = 0
    while qi < len(elements):
        current, word = elements[qi], words[qi]
        for letter, g in gens:
            prod = mat_mul(current, g)
            if prod not in seen:
                seen[prod] = len(elements)
                elements.append(prod)
                words.append(word + (letter,))
        qi += 1
    return elements, words


class AffineWeylGroup:
    """Group operations, input grammars and reduced words for one type."""

    def __init__(self, datum: RootDatum):
        self.datum = datum
        self.tag = datum.tag
        self.rank = datum.rank
        matrices, words = _enumerate_weyl(datum)
        self._weyl = tuple(
            FiniteWeylElement(datum.tag, m, i) for i, m in enumerate(matrices)
        )
        self._ids = {m: i for i, m in enumerate(matrices)}
        self._weyl_words = tuple(words)
        self._weyl_inverse = tuple(
            self._ids[mat_inverse_unimodular(m)] for m in matrices
        )
        zero = (0,) * datum.rank
        self.identity = AffineElement(zero, self._weyl[0])
        self.generators = tuple(
            AffineElement(g.translation, self.weyl(g.matrix))
            for g in datum.generators
        )

    # -- finite Weyl group -------------------------------------------------

    def finite_elements(self) -> tuple[FiniteWeylElement, ...]:
        return self._weyl

    @property
    def order_w0(self) -> int:
        return len(self._weyl)

    def weyl(self, matrix: Mat) -> FiniteWeylElement:
        try:
            return self._weyl[self._ids[matrix]]
        except KeyError:
            raise ValueError("matrix does not belong to this finite Weyl group") from None

    def weyl_word(self, w: FiniteWeylElement) -> Word:
        """The breadth-first search word for w (shortest, lex-least)."""
        return self._weyl_words[self._check_weyl(w).id]

    def weyl_inverse(self, w: FiniteWeylElement) -> FiniteWeylElement:
        return self._weyl[self._weyl_inverse[self._check_weyl(w).id]]

    def _check_weyl(self, w: FiniteWeylElement) -> FiniteWeylElement:
        if w.tag != self.tag:
            raise ValueError(f"element of type {w.tag} used with a group of type {self.tag}")
        return w

    def _check(self, x: AffineElement) -> AffineElement:
        self._check_weyl(x.w)
        return x

    # -- group operations --------------------------------------------------

    def translation(self, lam) -> AffineElement:
        return AffineElement(tuple(int(c) for c in lam), self._weyl[0])

    def element(self, lam, w: FiniteWeylElement) -> AffineElement:
        return AffineElement(tuple(int(c) for c in lam), self._check_weyl(w))

    def multiply(self, x: AffineElement, y: AffineElement) -> AffineElement:
        self._check(x), self._check(y)
        lam = vec_add(x.lam, mat_vec(x.w.matrix, y.lam))
        return AffineElement(lam, self.weyl(mat_mul(x.w.matrix, y.w.matrix)))

    def inverse(self, x: AffineElement) -> AffineElement:
        self._check(x)
        winv = self.weyl_inverse(x.w)
        return AffineElement(vec_neg(mat_vec(winv.matrix, x.lam)), winv)

    def conjugate(self, z: AffineElement, x: AffineElement) -> AffineElement:
        return self.multiply(self.multiply(z, x), self.inverse(z))

    # -- words and parsing ---------------------------------------------------

    def word_to_element(self, word) -> AffineElement:
        x = self.identity
        for letter in word:
            if not 0 <= letter < self.datum.num_generators:
                raise ValueError(f"invalid generator index {letter}")
            x = self.multiply(x, self.generators[letter])
        return x

    def parse(self, text: str) -> AffineElement:
        """Parse either input grammar: a digit word or t_(c1,..,cn)*s_XX."""
        return _parse_element(self, text)

    def lex_first_reduced_word(self, x: AffineElement) -> Word:
        """The reduced word for x that is lexicographically least.

        Greedy alcove walk: track q = x . barycenter and repeatedly peel off
        the smallest left descent (the least wall separating q from the
        fundamental alcove).  Each step removes one separating wall, so the
        walk terminates in length(x) steps, and choosing the least descent
        first yields the lex-least reduced word.
        """
        self._check(x)
        datum = self.datum
        q = vec_add(x.lam, mat_vec(x.w.matrix, datum.barycenter))
        word: list[int] = []
        while True:
            i = next(
                (i for i in range(datum.num_generators) if datum.wall_pairing(i, q) < 0),
                None,
            )
            if i is None:
                break
            word.append(i)
            q = datum.reflect(i, q)
        return tuple(word)

    def length(self, x: AffineElement) -> int:
        return len(self.lex_first_reduced_word(x))

    def spherical_word(self, w: FiniteWeylElement) -> Word:
        """Lex-first reduced word of a finite Weyl element (letters in S0)."""
        return self.lex_first_reduced_word(AffineElement((0,) * self.rank, self._check_weyl(w)))


# ---------------------------------------------------------------------------
# element input grammars

def word_string(word) -> str:
    """Human form of a word: 'e' for the empty word, else 's_<digits>'."""
    return "e" if not word else "s_" + "".join(str(i) for i in word)


_ASCII_DIGITS = "0123456789"


def _parse_digit_word(group: AffineWeylGroup, text: str, base: int) -> AffineElement:
    letters = []
    for k, ch in enumerate(text):
        if ch not in _ASCII_DIGITS:
            raise ParseError(f"unexpected character {ch!r}", base + k)
        letter = int(ch)
        if letter >= group.datum.num_generators:
            raise ParseError(f"generator index {letter} out of range", base + k)
        letters.append(letter)
    return group.word_to_element(letters)


def _parse_semidirect(group: AffineWeylGroup, text: str, base: int) -> AffineElement:
    rank = group.rank
    pos = 0

    def expect(token: str) -> None:
        nonlocal pos
        if not text.startswith(token, pos):
            raise ParseError(f"expected {token!r}", base + pos)
        pos += len(token)

    expect("t_(")
    coeffs: list[int] = []
    while True:
        start = pos
        if pos < len(text) and text[pos] == "-":
            pos += 1
        while pos < len(text) and text[pos] in _ASCII_DIGITS:
            pos += 1
        if pos == start or (pos == start + 1 and text[start] == "-"):
            raise ParseError("expected an integer coefficient", base + pos)
        coeffs.append(int(text[start:pos]))
        if pos < len(text) and text[pos] == ",":
            pos += 1
            continue
        break
    expect(")")
    if len(coeffs) != rank:
        raise ParseError(f"expected {rank} coefficients, got {len(coeffs)}", base + pos - 1)
    spherical = group.identity
    if pos < len(text):
        expect("*s_")
        letters = []
        start = pos
        while pos < len(text) and text[pos] in _ASCII_DIGITS:
            pos += 1
        if pos == start:
            raise ParseError("expected generator digits after '*s_'", base + pos)
        for k, ch in enumerate(text[start:pos]):
            letter = int(ch)
            if letter not in group.datum.finite_generators:
                raise ParseError(
                    f"generator {letter} does not fix the origin; "
                    f"spherical letters must be in "
                    f"{{{','.join(map(str, group.datum.finite_generators))}}}",
                    base + start + k,
                )
            letters.append(letter)
        spherical = group.word_to_element(letters)
    if pos != len(text):
        raise ParseError(f"unexpected trailing input {text[pos:]!r}", base + pos)
    return group.multiply(group.translation(coeffs), spherical)


def _parse_element(group: AffineWeylGroup, text: str) -> AffineElement:
    stripped = text.strip()
    base = text.index(stripped) if stripped else 0
    if stripped.startswith("t"):
        return _parse_semidirect(group, stripped, base)
    return _parse_digit_word(group, stripped, base)
