"""Chord diagrams and minimum chord removal.

The trivializing number of a diagram equals the least number of chords
that must be deleted from its chord diagram so that no two remaining
chords interleave.  Equivalently we keep a maximum independent set of the
circle graph, which interval dynamic programming finds in O(n^2).

Chords are numbered ``0..n-1`` in order of their first endpoint on the
(cut) circle.  Witnesses are deterministic: among all optimal kept sets we
return the lexicographically smallest sorted tuple of chord ids.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import StructureError, TooLarge

BRUTE_FORCE_LIMIT = 22


@dataclass(frozen=True)
class ChordDiagram:
    partner: tuple[int, ...]

    def __post_init__(self):
        p = self.partner
        for i, j in enumerate(p):
            if not 0 <= j < len(p) or j == i or p[j] != i:
                raise StructureError("partner is not a fixed-point-free involution")

    @classmethod
    def from_word(cls, symbols) -> "ChordDiagram":
        first: dict = {}
        partner = [0] * len(symbols)
        for pos, s in enumerate(symbols):
            if s in first:
                partner[pos], partner[first[s]] = first[s], pos
            else:
                first[s] = pos
        return cls(tuple(partner))

    @classmethod
    def from_pairs(cls, pairs) -> "ChordDiagram":
        partner = [0] * (2 * len(pairs))
        for a, b in pairs:
            partner[a], partner[b] = b, a
        return cls(tuple(partner))

    @cached_property
    def chords(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, j) for i, j in enumerate(self.partner) if i < j)

    @property
    def n(self) -> int:
        return len(self.partner) // 2

    @cached_property
    def chord_at(self) -> tuple[int, ...]:
        """Chord id owning each circle position."""
        out = [0] * len(self.partner)
        for c, (a, b) in enumerate(self.chords):
            out[a] = out[b] = c
        return tuple(out)

    def without(self, removed) -> "ChordDiagram":
        """Delete the chords in ``removed`` and close up the circle."""
        keep = [pos for pos in range(len(self.partner)) if self.chord_at[pos] not in removed]
        return ChordDiagram.from_word([self.chord_at[pos] for pos in keep])


@dataclass(frozen=True)
class RemovalWitness:
    removed: frozenset[int]
    kept: frozenset[int]


def interleaves(cd: ChordDiagram, a: int, b: int) -> bool:
    if a == b:
        raise ValueError("a chord does not interleave itself")
    a0, a1 = cd.chords[a]
    b0, b1 = cd.chords[b]
    return (a0 < b0 < a1) != (a0 < b1 < a1)


def interleave_masks(cd: ChordDiagram) -> list[int]:
    """Bitmask of the chords interleaving each chord."""
    masks = [0] * cd.n
    for a in range(cd.n):
        for b in range(a + 1, cd.n):
            if interleaves(cd, a, b):
                masks[a] |= 1 << b
                masks[b] |= 1 << a
    return masks


def is_parallel(cd: ChordDiagram) -> bool:
    return not any(interleave_masks(cd))


def is_noncrossing_set(cd: ChordDiagram, chords) -> bool:
    chords = sorted(chords)
    return not any(
        interleaves(cd, a, b) for i, a in enumerate(chords) for b in chords[i + 1:]
    )


def _interval_dp(cd: ChordDiagram, weight) -> int:
    """Best total weight of a non-interleaving chord set (``None`` = banned)."""
    L = len(cd.partner)
    if L == 0:
        return 0
    # M[i][j] for the arc i..j; row i+1 / column j-1 give the recurrence
    M = [[0] * (L + 1) for _ in range(L + 1)]
    for length in range(2, L + 1):
        for i in range(L - length + 1):
            j = i + length - 1
            best = M[i][j - 1]
            k = cd.partner[j]
            w = weight[cd.chord_at[j]]
            if i <= k < j and w is not None:
                left = M[i][k - 1] if k > i else 0
                inner = M[k + 1][j - 1] if k + 1 <= j - 1 else 0
                best = max(best, left + w + inner)
            M[i][j] = best
    return M[0][L - 1]


def max_noncrossing(cd: ChordDiagram) -> tuple[int, RemovalWitness]:
    n = cd.n
    size = _interval_dp(cd, [1] * n)
    # Lexicographic witness: admit chords in id order whenever an optimum
    # containing every admitted chord still exists.
    big = n + 1
    weight: list = [1] * n
    kept: list[int] = []
    for c in range(n):
        if len(kept) == size:
            weight[c:] = [None] * (n - c)
            break
        trial = weight.copy()
        trial[c] = big
        forced = len(kept) + 1
        if _interval_dp(cd, trial) == forced * big + (size - forced):
            weight[c] = big
            kept.append(c)
        else:
            weight[c] = None
    kept_set = frozenset(kept)
    return size, RemovalWitness(frozenset(range(n)) - kept_set, kept_set)


def min_removal(cd: ChordDiagram) -> tuple[int, RemovalWitness]:
    size, witness = max_noncrossing(cd)
    return cd.n - size, witness


def brute_force_min_removal(cd: ChordDiagram) -> tuple[int, RemovalWitness]:
    """Exhaustive search over all kept subsets; independent of the DP.

    Chord ``c`` is stored at bit ``n-1-c`` so that the numerically largest
    optimal mask is the lexicographically smallest kept set.
    """
    n = cd.n
    if n > BRUTE_FORCE_LIMIT:
        raise TooLarge(f"{n} chords exceeds the brute-force limit {BRUTE_FORCE_LIMIT}")
    conflicts = interleave_masks(cd)
    bit_conflict = [0] * n
    for c in range(n):
        for d in range(n):
            if conflicts[c] >> d & 1:
                bit_conflict[n - 1 - c] |= 1 << (n - 1 - d)
    valid = np.ones(1, dtype=bool)
    popcount = np.zeros(1, dtype=np.int8)
    for q in range(n):
        lower = np.arange(1 << q, dtype=np.int64)
        valid = np.concatenate([valid, valid & ((lower & bit_conflict[q]) == 0)])
        popcount = np.concatenate([popcount, popcount + 1])
    best = int(popcount[valid].max())
    mask = int(np.flatnonzero(valid & (popcount == best)).max())
    kept = frozenset(c for c in range(n) if mask >> (n - 1 - c) & 1)
    return n - best, RemovalWitness(frozenset(range(n)) - kept, kept)


def trivializing_number(code) -> tuple[int, RemovalWitness, bool]:
    """Trivializing number of a :class:`GaussCode` or :class:`ProjectionWord`.

    ``parity_ok`` reports whether the count is even, which every genuine
    knot projection satisfies; arbitrary words may fail it.
    """
    from .codes import GaussCode, projection_of

    word = projection_of(code) if isinstance(code, GaussCode) else code
    cd = ChordDiagram.from_word(word.symbols)
    tr, witness = min_removal(cd)
    return tr, witness, tr % 2 == 0
