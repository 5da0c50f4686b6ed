"""Links as closed braids: parsing, components, linking numbers, self-linking.

A braid on ``n`` strands is a word in the generators ``1..n-1``; letter
``+i`` is the right-handed (positive) crossing of the strands in positions
``i`` and ``i+1`` (1-based), ``-i`` its inverse.  Strands are identified by
their top position (0-based); closure joins bottom position ``p`` back to top
position ``p``.

The closure of a braid about its axis is transverse to the standard contact
structure on the 3-sphere, and its self-linking number is the exponent sum
of the relevant crossings minus the number of strands.  :func:`self_linking`
uses that count; :func:`push_off_linking` instead builds the framed parallel
copy as an explicit doubled braid and counts crossings between the copies.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .gf2 import InternalInvariantError, LinkingParity


class BraidParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at column {position})")
        self.position = position


class BraidRangeError(ValueError):
    def __init__(self, letter: int, strands: int):
        super().__init__(
            f"letter {letter} is out of range for a braid on {strands} strand(s); "
            f"generators must satisfy 1 <= |g| <= {strands - 1}"
        )
        self.letter = letter
        self.strands = strands


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise ValueError(f"a braid needs at least one strand, got {self.strands}")
        object.__setattr__(self, "letters", tuple(int(g) for g in self.letters))
        for g in self.letters:
            if g == 0 or abs(g) > self.strands - 1:
                raise BraidRangeError(g, self.strands)

    def __str__(self) -> str:
        return format_braid(self)

    def __len__(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class LinkComponents:
    count: int
    assignment: tuple[int, ...]

    def strands_of(self, c: int) -> tuple[int, ...]:
        return tuple(s for s, k in enumerate(self.assignment) if k == c)


@dataclass(frozen=True)
class FramedLink:
    braid: BraidWord
    framings: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "framings", tuple(int(f) for f in self.framings))
        count = closure_components(self.braid).count
        if len(self.framings) != count:
            raise ValueError(
                f"{len(self.framings)} framing(s) given for a closure with {count} component(s)"
            )


_STRANDS = re.compile(r"[1-9][0-9]*")
_LETTER = re.compile(r"-?[1-9][0-9]*")


def parse_braid(text: str) -> BraidWord:
    """Parse ``"<strands> | <letters...>"``, e.g. ``"2 | 1 1 1"`` or ``"1 |"``.

    Integers are written without a plus sign or leading zeros, so the
    canonical text of a braid is unique and survives ``format_braid``.
    """
    bar = text.find("|")
    if bar < 0:
        raise BraidParseError("missing '|' separating strand count from letters", len(text))
    head = text[:bar]
    m = re.fullmatch(r"\s*(\S+)\s*", head)
    if m is None:
        raise BraidParseError("missing strand count", 0)
    if not _STRANDS.fullmatch(m.group(1)):
        raise BraidParseError(f"invalid strand count {m.group(1)!r}", m.start(1))
    strands = int(m.group(1))
    letters = []
    for tok in re.finditer(r"\S+", text[bar + 1:]):
        pos = bar + 1 + tok.start()
        if not _LETTER.fullmatch(tok.group()):
            raise BraidParseError(f"invalid generator letter {tok.group()!r}", pos)
        letters.append(int(tok.group()))
    return BraidWord(strands, tuple(letters))


def format_braid(b: BraidWord) -> str:
    if not b.letters:
        return f"{b.strands} |"
    return f"{b.strands} | " + " ".join(str(g) for g in b.letters)


def writhe(b: BraidWord) -> int:
    """Exponent sum of the word."""
    return sum(1 if g > 0 else -1 for g in b.letters)


def crossings(b: BraidWord) -> Iterator[tuple[int, int, int]]:
    """Yield ``(sign, strand, strand)`` for every letter, strands named by top position."""
    occupant = list(range(b.strands))
    for g in b.letters:
        i = abs(g) - 1
        yield (1 if g > 0 else -1), occupant[i], occupant[i + 1]
        occupant[i], occupant[i + 1] = occupant[i + 1], occupant[i]


def strand_permutation(b: BraidWord) -> tuple[int, ...]:
    """``perm[p]`` is the bottom position reached by the strand starting at top position ``p``."""
    occupant = list(range(b.strands))
    for g in b.letters:
        i = abs(g) - 1
        occupant[i], occupant[i + 1] = occupant[i + 1], occupant[i]
    perm = [0] * b.strands
    for q, s in enumerate(occupant):
        perm[s] = q
    return tuple(perm)


def closure_components(b: BraidWord) -> LinkComponents:
    """Cycles of the strand permutation, numbered by their least strand."""
    perm = strand_permutation(b)
    assignment = [-1] * b.strands
    count = 0
    for start in range(b.strands):
        if assignment[start] >= 0:
            continue
        p = start
        while assignment[p] < 0:
            assignment[p] = count
            p = perm[p]
        count += 1
    return LinkComponents(count, tuple(assignment))


def linking_matrix(b: BraidWord) -> list[list[int]]:
    comps = closure_components(b)
    k = comps.count
    twice = [[0] * k for _ in range(k)]
    for sign, s, t in crossings(b):
        ci, cj = comps.assignment[s], comps.assignment[t]
        if ci != cj:
            twice[ci][cj] += sign
            twice[cj][ci] += sign
    for row in twice:
        for v in row:
            if v % 2:
                raise InternalInvariantError("odd crossing count between distinct components")
    return [[v // 2 for v in row] for row in twice]


def linking_parity(b: BraidWord) -> LinkingParity:
    return LinkingParity.from_linking_matrix(linking_matrix(b))


def _check_component(b: BraidWord, c: int) -> LinkComponents:
    comps = closure_components(b)
    if not 0 <= c < comps.count:
        raise IndexError(f"component {c} does not exist; closure has {comps.count} component(s)")
    return comps


def self_linking(b: BraidWord, c: int = 0) -> int:
    """Self-linking number of component ``c`` of the closed braid.

    Self-crossings of the component minus its strand count; crossings with
    other components do not enter, since deleting those components leaves
    the transverse closure of ``c`` intact.
    """
    comps = _check_component(b, c)
    own = comps.assignment
    e = sum(sign for sign, s, t in crossings(b) if own[s] == c and own[t] == c)
    return e - own.count(c)


def doubled_braid(b: BraidWord, c: int) -> tuple[BraidWord, int, int]:
    """Replace each strand of component ``c`` by a framed pair of parallel strands.

    Every letter becomes the block crossing of the (possibly doubled) strands
    it involves.  Each doubled pair also receives one negative full twist,
    which moves the blackboard parallel to the contact-framed one.

    Returns the doubled braid and the top positions of the two copies of the
    least strand of ``c``.
    """
    comps = _check_component(b, c)
    width = [2 if k == c else 1 for k in comps.assignment]
    occupant = list(range(b.strands))

    def offset(pos: int) -> int:
        return sum(width[occupant[p]] for p in range(pos))

    top = offset(comps.strands_of(c)[0])
    letters: list[int] = []
    for p in range(b.strands):
        if width[occupant[p]] == 2:
            q = offset(p) + 1
            letters += [-q, -q]
    for g in b.letters:
        i = abs(g) - 1
        sign = 1 if g > 0 else -1
        left, right = width[occupant[i]], width[occupant[i + 1]]
        start = offset(i) + 1
        for k in reversed(range(left)):
            for t in range(right):
                letters.append(sign * (start + k + t))
        occupant[i], occupant[i + 1] = occupant[i + 1], occupant[i]
    return BraidWord(sum(width), tuple(letters)), top, top + 1


def push_off_linking(b: BraidWord, c: int = 0) -> int:
    """Linking number of component ``c`` with its contact-framed push-off.

    Computed from the doubled braid of :func:`doubled_braid` as half the
    signed count of crossings between the two copies.
    """
    doubled, top1, top2 = doubled_braid(b, c)
    comps = closure_components(doubled)
    k1, k2 = comps.assignment[top1], comps.assignment[top2]
    if k1 == k2:
        raise InternalInvariantError("the two copies of a knot closed up into one component")
    twice = 0
    for sign, s, t in crossings(doubled):
        if {comps.assignment[s], comps.assignment[t]} == {k1, k2}:
            twice += sign
    if twice % 2:
        raise InternalInvariantError("odd crossing count between push-off copies")
    return twice // 2


# Rewriting moves, used to probe invariance properties.

def rotate(b: BraidWord, k: int = 1) -> BraidWord:
    """Cyclic rotation (conjugation) moving the first ``k`` letters to the end."""
    if not b.letters:
        return b
    k %= len(b.letters)
    return BraidWord(b.strands, b.letters[k:] + b.letters[:k])


def rotation_component_map(b: BraidWord, k: int = 1) -> list[int]:
    """Map component indices of ``b`` to those of ``rotate(b, k)``."""
    if not b.letters:
        return list(range(closure_components(b).count))
    k %= len(b.letters)
    head = BraidWord(b.strands, b.letters[:k])
    perm = strand_permutation(head)
    before = closure_components(b)
    after = closure_components(rotate(b, k))
    mapping = [-1] * before.count
    for p in range(b.strands):
        mapping[before.assignment[p]] = after.assignment[perm[p]]
    return mapping


def far_commutation_sites(b: BraidWord) -> list[int]:
    return [
        i for i in range(len(b.letters) - 1)
        if abs(abs(b.letters[i]) - abs(b.letters[i + 1])) >= 2
    ]


def apply_far_commutation(b: BraidWord, i: int) -> BraidWord:
    g, h = b.letters[i], b.letters[i + 1]
    if abs(abs(g) - abs(h)) < 2:
        raise ValueError(f"letters {g}, {h} at {i} do not commute")
    letters = list(b.letters)
    letters[i], letters[i + 1] = h, g
    return BraidWord(b.strands, tuple(letters))


def braid_relation_sites(b: BraidWord) -> list[int]:
    """Indices ``i`` where ``letters[i:i+3]`` reads ``x y x`` with ``|x|, |y|`` adjacent and equal signs."""
    sites = []
    w = b.letters
    for i in range(len(w) - 2):
        x, y, z = w[i], w[i + 1], w[i + 2]
        if x == z and abs(abs(x) - abs(y)) == 1 and (x > 0) == (y > 0):
            sites.append(i)
    return sites


def apply_braid_relation(b: BraidWord, i: int) -> BraidWord:
    """Replace ``x y x`` at ``i`` by ``y x y``."""
    x, y, z = b.letters[i:i + 3]
    if not (x == z and abs(abs(x) - abs(y)) == 1 and (x > 0) == (y > 0)):
        raise ValueError(f"no braid relation applies at {i}")
    letters = b.letters[:i] + (y, x, y) + b.letters[i + 3:]
    return BraidWord(b.strands, letters)


def stabilize(b: BraidWord, sign: int = 1) -> BraidWord:
    """Add a strand and append the letter ``sign * strands``."""
    return BraidWord(b.strands + 1, b.letters + ((1 if sign > 0 else -1) * b.strands,))


def random_braid(rng: np.random.Generator, strands: int, length: int) -> BraidWord:
    if strands == 1:
        return BraidWord(1, ())
    gens = rng.integers(1, strands, size=length)
    signs = rng.choice([-1, 1], size=length)
    return BraidWord(strands, tuple(int(g * s) for g, s in zip(gens, signs)))


def all_braids(strands: int, max_length: int) -> Iterator[BraidWord]:
    """Every braid word on ``strands`` strands of length at most ``max_length``."""
    alphabet = [g for i in range(1, strands) for g in (i, -i)]
    for length in range(max_length + 1):
        if length and not alphabet:
            return
        for word in itertools.product(alphabet, repeat=length):
            yield BraidWord(strands, word)


def is_knot(b: BraidWord) -> bool:
    return closure_components(b).count == 1

