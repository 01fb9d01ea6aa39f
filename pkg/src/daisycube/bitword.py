"""Fixed-length binary words, the vertices of the hypercube Q_n.

A word of length ``n`` is stored as a Python int. Coordinate ``i`` (1-based,
leftmost character of the text form) lives at bit position ``n - i``, so the
integer value of a word equals ``int(text, 2)`` and numeric order coincides
with lexicographic order of the text form.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_LENGTH = 64


class WordLengthError(ValueError):
    """Raised when two words of different length are combined."""


@dataclass(frozen=True, slots=True)
class Word:
    """Binary word ``u_1 ... u_n``.

    Parameters
    ----------
    n : int
        Length, ``1 <= n <= 64``. Length 0 is accepted only for the empty
        word that labels the single vertex of ``K_1`` in the ``n = 0``
        Fibonacci and Lucas cubes.
    bits : int
        Encoded value, coordinate ``i`` at bit ``n - i``.
    """

    n: int
    bits: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_LENGTH:
            raise ValueError(f"word length must be in [0, {MAX_LENGTH}], got {self.n}")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bits {self.bits:#x} do not fit in {self.n} coordinates")

    @classmethod
    def zeros(cls, n: int) -> Word:
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> Word:
        return cls(n, (1 << n) - 1)

    @classmethod
    def from_coordinates(cls, n: int, ones) -> Word:
        """Word of length ``n`` whose 1-coordinates (1-based) are ``ones``."""
        bits = 0
        for i in ones:
            if not 1 <= i <= n:
                raise ValueError(f"coordinate {i} out of range for length {n}")
            bits |= 1 << (n - i)
        return cls(n, bits)

    def __getitem__(self, i: int) -> int:
        """Coordinate ``u_i`` with 1-based ``i``."""
        if not 1 <= i <= self.n:
            raise IndexError(i)
        return (self.bits >> (self.n - i)) & 1

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        return format_word(self)

    def __and__(self, other: Word) -> Word:
        return meet(self, other)

    def __or__(self, other: Word) -> Word:
        _check_same_length(self, other)
        return Word(self.n, self.bits | other.bits)

    def __xor__(self, other: Word) -> Word:
        _check_same_length(self, other)
        return Word(self.n, self.bits ^ other.bits)

    def __invert__(self) -> Word:
        return Word(self.n, self.bits ^ ((1 << self.n) - 1))

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def concat(self, other: Word) -> Word:
        """``self`` followed by ``other``."""
        n = self.n + other.n
        if n > MAX_LENGTH:
            raise ValueError(f"concatenated length {n} exceeds {MAX_LENGTH}")
        return Word(n, (self.bits << other.n) | other.bits)


def _check_same_length(u: Word, v: Word) -> None:
    if u.n != v.n:
        raise WordLengthError(f"length mismatch: {u.n} != {v.n}")


def weight(u: Word) -> int:
    """Number of 1s in ``u``."""
    return u.bits.bit_count()


def leq(u: Word, v: Word) -> bool:
    """Coordinatewise order: ``u_i <= v_i`` for every ``i``."""
    _check_same_length(u, v)
    return u.bits & ~v.bits == 0


def meet(u: Word, v: Word) -> Word:
    """Coordinatewise AND, the greatest lower bound of ``u`` and ``v``."""
    _check_same_length(u, v)
    return Word(u.n, u.bits & v.bits)


def hamming(u: Word, v: Word) -> int:
    """Number of coordinates in which ``u`` and ``v`` differ."""
    _check_same_length(u, v)
    return (u.bits ^ v.bits).bit_count()


def parse(text: str) -> Word:
    """Parse a 0/1 string; the leftmost character is coordinate 1.

    >>> parse("0110")
    Word(n=4, bits=6)
    """
    if not isinstance(text, str):
        raise TypeError(f"expected str, got {type(text).__name__}")
    if not text:
        raise ValueError("empty word")
    if len(text) > MAX_LENGTH:
        raise ValueError(f"word of length {len(text)} exceeds {MAX_LENGTH}")
    bad = set(text) - {"0", "1"}
    if bad:
        raise ValueError(f"invalid character(s) {''.join(sorted(bad))!r} in word {text!r}")
    return Word(len(text), int(text, 2))


def format_word(u: Word) -> str:
    if u.n == 0:
        return ""
    return format(u.bits, f"0{u.n}b")


def submasks(mask: int):
    """All submasks of ``mask``, ``mask`` itself first and 0 last."""
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask
