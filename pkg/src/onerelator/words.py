"""Exact word algebra in a finite-rank free group G and the free product G*<t>.

Words are stored as flat, freely reduced sequences of signed letters.  The
stable letter is always ``t``; ``s`` is reserved as the auxiliary variable of
two-variable words.  Uppercase letters denote inverses in the surface syntax,
so ``"aTbt"`` is a t^-1 b t.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

STABLE = "t"
AUX = "s"
RESERVED = frozenset({STABLE, AUX})

#: a signed letter: (generator symbol, +1 or -1)
Letter = tuple[str, int]


class WordSyntaxError(ValueError):
    """Raised by :func:`parse_word` with the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def make_alphabet(symbols: Iterable[str]) -> frozenset[str]:
    """Validate and freeze a base alphabet (single lowercase letters, no 't'/'s')."""
    out = frozenset(symbols)
    for sym in out:
        if len(sym) != 1 or not sym.islower():
            raise ValueError(f"generator must be a single lowercase letter: {sym!r}")
        if sym in RESERVED:
            raise ValueError(f"generator symbol {sym!r} is reserved")
    return out


def free_alphabet(rank: int) -> frozenset[str]:
    """The first ``rank`` letters a, b, c, ... (skipping reserved symbols)."""
    symbols = []
    for code in range(ord("a"), ord("z") + 1):
        sym = chr(code)
        if sym in RESERVED:
            continue
        symbols.append(sym)
        if len(symbols) == rank:
            return make_alphabet(symbols)
    raise ValueError("rank too large for single-letter alphabet")


def _reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for sym, sign in letters:
        if stack and stack[-1][0] == sym and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((sym, sign))
    return tuple(stack)


def letter_key(letter: Letter) -> tuple[int, str, int]:
    """Total letter order: base letters alphabetically (x before x^-1), then t, t^-1."""
    sym, sign = letter
    return (1 if sym == STABLE else 0, sym, 0 if sign > 0 else 1)


def word_key(letters: Sequence[Letter]) -> tuple[tuple[int, str, int], ...]:
    return tuple(letter_key(l) for l in letters)


@dataclass(frozen=True)
class Word:
    """A freely reduced element of G*<t> (or of G when no t-letter occurs)."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        if self.letters != _reduce(self.letters):
            raise ValueError("Word requires freely reduced letters; use free_reduce")

    # -- construction ------------------------------------------------------

    @staticmethod
    def identity() -> "Word":
        return Word()

    @staticmethod
    def generator(sym: str, sign: int = 1) -> "Word":
        return Word(((sym, sign),))

    # -- group operations --------------------------------------------------

    def __mul__(self, other: "Word") -> "Word":
        return Word(_reduce(self.letters + other.letters))

    def inverse(self) -> "Word":
        return Word(tuple((sym, -sign) for sym, sign in reversed(self.letters)))

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        out = Word()
        for _ in range(abs(n)):
            out = out * base
        return out

    def conjugated_by(self, u: "Word") -> "Word":
        """u^-1 * self * u."""
        return u.inverse() * self * u

    # -- predicates --------------------------------------------------------

    def is_identity(self) -> bool:
        return not self.letters

    def in_base_group(self) -> bool:
        return all(sym != STABLE for sym, _ in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __str__(self) -> str:
        return "".join(sym if sign > 0 else sym.upper() for sym, sign in self.letters)

    def __repr__(self) -> str:
        return f"Word({str(self) or '1'!r})"


def free_reduce(raw: Iterable[Letter]) -> Word:
    """Freely reduce an arbitrary letter sequence."""
    return Word(_reduce(raw))


def parse_word(
    text: str,
    alphabet: Iterable[str],
    allow_aux: bool = False,
) -> Word:
    """Parse the surface syntax: letters, uppercase inverses, optional ``^k``.

    Raises :class:`WordSyntaxError` with the offending position, or
    ``ValueError`` for generators outside ``alphabet``.
    """
    alpha = frozenset(alphabet)
    known = alpha | {STABLE} | ({AUX} if allow_aux else frozenset())
    raw: list[Letter] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        sym, sign = ch.lower(), (1 if ch.islower() else -1)
        if not ch.isalpha():
            raise WordSyntaxError(f"unexpected character {ch!r}", i)
        if sym not in known:
            raise WordSyntaxError(f"unknown generator {sym!r}", i)
        i += 1
        count = 1
        if i < n and text[i] == "^":
            j = i + 1
            if j < n and text[j] == "-":
                j += 1
            k = j
            while k < n and text[k].isdigit():
                k += 1
            if k == j:
                raise WordSyntaxError("expected integer exponent after '^'", i)
            count = int(text[i + 1 : k])
            if count == 0:
                raise WordSyntaxError("zero exponent not allowed", i)
            i = k
        if count < 0:
            sign, count = -sign, -count
        raw.extend([(sym, sign)] * count)
    return free_reduce(raw)


# -- reduced-word anatomy (head, blocks, coefficients, shape) ---------------


def blocks(w: Word) -> tuple[Word, tuple[tuple[int, Word], ...]]:
    """Split ``w`` as head g0 followed by (t-exponent, coefficient) blocks."""
    head: list[Letter] = []
    out: list[tuple[int, Word]] = []
    cur_exp = 0
    cur: list[Letter] = []
    seen_t = False
    for sym, sign in w.letters:
        if sym == STABLE:
            if seen_t and not cur and (sign > 0) == (cur_exp > 0):
                cur_exp += sign
            else:
                if seen_t:
                    out.append((cur_exp, Word(tuple(cur))))
                cur_exp, cur, seen_t = sign, [], True
        else:
            if seen_t:
                cur.append((sym, sign))
            else:
                head.append((sym, sign))
    if seen_t:
        out.append((cur_exp, Word(tuple(cur))))
    return Word(tuple(head)), tuple(out)


def exponent_sum(w: Word) -> int:
    """The exponent sum of t in ``w``."""
    return sum(sign for sym, sign in w.letters if sym == STABLE)


def t_shape(w: Word) -> tuple[int, ...]:
    """The sequence of t-exponents (q1, ..., qn); empty for words in G."""
    return tuple(q for q, _ in blocks(w)[1])


def coefficients(w: Word) -> tuple[Word, ...]:
    """The coefficients (g0, g1, ..., gn), including trivial end coefficients."""
    head, blks = blocks(w)
    return (head,) + tuple(g for _, g in blks)


def assemble(coeffs: Sequence[Word], shape: Sequence[int]) -> Word:
    """Rebuild g0 t^q1 g1 ... t^qn gn from coefficients and a t-shape."""
    if len(coeffs) != len(shape) + 1:
        raise ValueError("need one more coefficient than shape entries")
    raw: list[Letter] = list(coeffs[0].letters)
    for q, g in zip(shape, coeffs[1:]):
        raw.extend([(STABLE, 1 if q > 0 else -1)] * abs(q))
        raw.extend(g.letters)
    return free_reduce(raw)


# -- cyclic reduction and conjugacy ----------------------------------------


def _rotations(letters: tuple[Letter, ...]) -> Iterator[tuple[Letter, ...]]:
    for i in range(len(letters)):
        yield letters[i:] + letters[:i]


def cyclic_reduce(w: Word) -> tuple[Word, Word]:
    """Cyclically reduce ``w``.

    Returns ``(reduced, u)`` with ``u.inverse() * reduced * u == w``.  The
    reduced word ends in a t-letter whenever it mixes base and t-letters, so
    its final coefficient is trivial and its leading one is not.
    """
    cur = list(w.letters)
    conj: list[Letter] = []  # V, as letters; invariant: cur == V w V^-1
    while len(cur) >= 2 and cur[0][0] == cur[-1][0] and cur[0][1] == -cur[-1][1]:
        first = cur.pop(0)
        cur.pop()
        conj.insert(0, (first[0], -first[1]))
    letters = tuple(cur)
    has_t = any(sym == STABLE for sym, _ in letters)
    has_base = any(sym != STABLE for sym, _ in letters)
    if has_t and has_base and not (
        letters[0][0] != STABLE and letters[-1][0] == STABLE
    ):
        best = None
        best_i = 0
        for i, rot in enumerate(_rotations(letters)):
            if rot[0][0] != STABLE and rot[-1][0] == STABLE:
                key = word_key(rot)
                if best is None or key < best[0]:
                    best = (key, rot)
                    best_i = i
        assert best is not None
        prefix = letters[:best_i]
        letters = best[1]
        conj = [(sym, -sign) for sym, sign in reversed(prefix)] + conj
    return Word(letters), free_reduce(conj)


def conjugacy_canonical(w: Word) -> Word:
    """The lexicographically least rotation of the cyclic reduction of ``w``.

    Two elements of G*<t> are conjugate iff their canonical words coincide.
    """
    reduced, _ = cyclic_reduce(w)
    if reduced.is_identity():
        return reduced
    return Word(min(_rotations(reduced.letters), key=word_key))


def is_conjugate_to_gt(w: Word) -> Optional[tuple[Word, int]]:
    """If ``w`` is conjugate to g t^e with e = +-1, return (g, e); else None."""
    reduced, _ = cyclic_reduce(w)
    shape = t_shape(reduced)
    if shape not in ((1,), (-1,)):
        return None
    # cyclically reduced with shape (+-1): a base run followed by one t-letter
    g = Word(reduced.letters[:-1])
    return g, reduced.letters[-1][1]
