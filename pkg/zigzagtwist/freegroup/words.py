"""
Free Group Words

Words in the free group on sigma_1..sigma_n, stored as tuples of signed
generator indices: 2 is sigma_2, -2 is its inverse. Words are kept as
written; `reduce` performs free cancellation.
"""

from collections import Counter
from dataclasses import dataclass
import re

_LETTER_RE = re.compile(r"^s(\d+)(?:\^(-?\d+))?$")


@dataclass(frozen=True, order=True)
class Word:
    """A (not necessarily reduced) word in the free group."""
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if any(not isinstance(l, int) or l == 0 for l in self.letters):
            raise ValueError(f"Letters must be nonzero integers, got {self.letters}")

    @classmethod
    def identity(cls) -> "Word":
        return cls()

    @classmethod
    def generator(cls, i: int, sign: int = 1) -> "Word":
        if i < 1:
            raise ValueError(f"Generator index must be positive, got {i}")
        return cls((i if sign > 0 else -i,))

    @classmethod
    def of(cls, *letters: int) -> "Word":
        return cls(tuple(letters))

    @classmethod
    def parse(cls, text: str) -> "Word":
        """
        Parse "s1 s2^-1 s3". The identity is "", "1" or "e".

        Raises:
            ValueError: On a malformed token
        """
        text = text.strip()
        if text in ("", "1", "e"):
            return cls()
        letters: list[int] = []
        for token in text.replace("*", " ").split():
            match = _LETTER_RE.match(token)
            if match is None:
                raise ValueError(f"Malformed word token {token!r} in {text!r}")
            index = int(match.group(1))
            power = int(match.group(2)) if match.group(2) is not None else 1
            if index < 1:
                raise ValueError(f"Generator index must be positive in {token!r}")
            if power not in (1, -1):
                raise ValueError(f"Only exponents 1 and -1 are accepted, got {token!r}")
            letters.append(index if power > 0 else -index)
        return cls(tuple(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        """Group product, freely reduced."""
        return reduce(Word(self.letters + other.letters))

    def concat(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple(-l for l in reversed(self.letters)))

    def max_generator(self) -> int:
        return max((abs(l) for l in self.letters), default=0)

    def is_positive(self) -> bool:
        return all(l > 0 for l in self.letters)

    def format(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"s{l}" if l > 0 else f"s{-l}^-1" for l in self.letters)

    def __str__(self) -> str:
        return self.format()


def reduce(word: Word) -> Word:
    """Free cancellation of adjacent inverse pairs."""
    stack: list[int] = []
    for letter in word.letters:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return Word(tuple(stack))


def is_reduced(word: Word) -> bool:
    return all(a != -b for a, b in zip(word.letters, word.letters[1:]))


def cyclic_reduce(word: Word) -> tuple[Word, Word]:
    """
    Split reduce(w) = g c g^-1 with c cyclically reduced.

    Returns:
        (g, c)
    """
    letters = reduce(word).letters
    start, end = 0, len(letters)
    while end - start >= 2 and letters[start] == -letters[end - 1]:
        start += 1
        end -= 1
    return Word(letters[:start]), Word(letters[start:end])


def counts(word: Word) -> tuple[int, int]:
    """(positive letters, negative letters) of the reduced word."""
    letters = reduce(word).letters
    positive = sum(1 for l in letters if l > 0)
    return positive, len(letters) - positive


def exponent_sum(word: Word) -> int:
    """Abelianization to Z; invariant under free reduction."""
    return sum(1 if l > 0 else -1 for l in word.letters)


def letter_histogram(word: Word) -> Counter:
    return Counter(reduce(word).letters)


def gamma(n: int) -> Word:
    """The Coxeter element sigma_1 ... sigma_n."""
    if n < 1:
        raise ValueError(f"Rank must be at least 1, got {n}")
    return Word(tuple(range(1, n + 1)))


def product(words) -> Word:
    total = Word()
    for w in words:
        total = total * w
    return total


def all_reduced_words(n: int, max_length: int):
    """Every reduced word of length <= max_length, by length then lexicographically."""
    letters = [l for i in range(1, n + 1) for l in (i, -i)]
    layer = [Word()]
    yield Word()
    for _ in range(max_length):
        following = []
        for w in layer:
            for l in letters:
                if w.letters and w.letters[-1] == -l:
                    continue
                following.append(Word(w.letters + (l,)))
        for w in following:
            yield w
        layer = following
