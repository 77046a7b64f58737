"""Bijective codecs between naturals and small combinatorial objects.

Everything downstream that has to enumerate an infinite family (sentences,
finite sequences, certificate indices) goes through the rank/unrank functions
here, so determinism and invertibility are concentrated in one place.

Three layers:

* Cantor pairing on pairs of naturals.
* Compositions: length-n sequences of naturals with a fixed digit sum,
  ranked lexicographically inside the sum shell.
* Sequence codecs built from sum shells.  Ordering by (sum, lex) instead of
  nesting pairs keeps the rank of a small-valued sequence polynomial in its
  length, which the fact-listing budgets rely on.
"""

from __future__ import annotations

from math import comb, isqrt
from typing import Iterator, Sequence, Tuple

Seq = Tuple[int, ...]


def pair(a: int, b: int) -> int:
    """Cantor pairing: bijection N x N -> N, diagonal by a+b."""
    if a < 0 or b < 0:
        raise ValueError("pair expects naturals")
    s = a + b
    return s * (s + 1) // 2 + b


def unpair(k: int) -> Tuple[int, int]:
    """Inverse of pair."""
    if k < 0:
        raise ValueError("unpair expects a natural")
    s = (isqrt(8 * k + 1) - 1) // 2
    b = k - s * (s + 1) // 2
    return s - b, b


# ---------------------------------------------------------------------------
# Compositions: weak compositions of s into n parts, lex order.
# ---------------------------------------------------------------------------


def composition_count(s: int, n: int) -> int:
    """Number of length-n sequences of naturals summing to s."""
    if n == 0:
        return 1 if s == 0 else 0
    return comb(s + n - 1, n - 1)


def composition_unrank(s: int, n: int, r: int) -> Seq:
    """r-th (lex order) length-n sequence of naturals summing to s."""
    if r < 0 or r >= composition_count(s, n):
        raise ValueError(f"composition rank {r} out of range for (s={s}, n={n})")
    out = []
    remaining = s
    for pos in range(n):
        if pos == n - 1:
            out.append(remaining)
            break
        v = 0
        while True:
            block = composition_count(remaining - v, n - pos - 1)
            if r < block:
                out.append(v)
                remaining -= v
                break
            r -= block
            v += 1
    return tuple(out)


def composition_rank(seq: Sequence[int]) -> int:
    """Lex rank of seq among length-len(seq) sequences with the same sum."""
    n = len(seq)
    remaining = sum(seq)
    r = 0
    for pos, v in enumerate(seq):
        for w in range(v):
            r += composition_count(remaining - w, n - pos - 1)
        remaining -= v
    return r


# ---------------------------------------------------------------------------
# Fixed-length sequences: shells by digit sum, lex within a shell.
# ---------------------------------------------------------------------------


def seq_fixed_rank(seq: Sequence[int]) -> int:
    n = len(seq)
    s = sum(seq)
    offset = sum(composition_count(t, n) for t in range(s))
    return offset + composition_rank(seq)


def seq_fixed_unrank(n: int, r: int) -> Seq:
    if r < 0:
        raise ValueError("rank must be a natural")
    if n == 0:
        if r == 0:
            return ()
        raise ValueError("only one empty sequence")
    s = 0
    while True:
        c = composition_count(s, n)
        if r < c:
            return composition_unrank(s, n, r)
        r -= c
        s += 1


# ---------------------------------------------------------------------------
# Variable-length sequences with length >= min_len: shells by (len-min_len)+sum.
# Within a shell: shorter first, then lex.
# ---------------------------------------------------------------------------


def seq_varlen_rank(seq: Sequence[int], min_len: int = 0) -> int:
    n = len(seq)
    if n < min_len:
        raise ValueError(f"sequence shorter than min_len={min_len}")
    s = sum(seq)
    shell = (n - min_len) + s
    offset = 0
    for d in range(shell):
        for ln in range(min_len, min_len + d + 1):
            offset += composition_count(d - (ln - min_len), ln)
    for ln in range(min_len, n):
        offset += composition_count(shell - (ln - min_len), ln)
    return offset + composition_rank(seq)


def seq_varlen_unrank(r: int, min_len: int = 0) -> Seq:
    if r < 0:
        raise ValueError("rank must be a natural")
    shell = 0
    while True:
        total = 0
        sizes = []
        for ln in range(min_len, min_len + shell + 1):
            c = composition_count(shell - (ln - min_len), ln)
            sizes.append((ln, c))
            total += c
        if r < total:
            for ln, c in sizes:
                if r < c:
                    return composition_unrank(shell - (ln - min_len), ln, r)
                r -= c
        r -= total
        shell += 1


def iter_seqs(min_len: int = 0) -> Iterator[Seq]:
    """All finite sequences of naturals with length >= min_len, codec order."""
    r = 0
    while True:
        yield seq_varlen_unrank(r, min_len)
        r += 1


def subset_count(n: int, k: int) -> int:
    return comb(n, k)


def subset_unrank(n: int, k: int, r: int) -> Seq:
    """r-th k-subset of {0..n-1} in lexicographic order, as a sorted tuple."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if not 0 <= r < comb(n, k):
        raise ValueError("subset rank out of range")
    out = []
    lo = 0
    for slot in range(k, 0, -1):
        for v in range(lo, n):
            block = comb(n - v - 1, slot - 1)
            if r < block:
                out.append(v)
                lo = v + 1
                break
            r -= block
    return tuple(out)


def subset_rank(n: int, positions: Sequence[int]) -> int:
    """Inverse of subset_unrank."""
    k = len(positions)
    prev = -1
    r = 0
    for slot, v in enumerate(positions):
        if not prev < v < n:
            raise ValueError("positions must be strictly increasing in range")
        for w in range(prev + 1, v):
            r += comb(n - w - 1, k - slot - 1)
        prev = v
    return r
