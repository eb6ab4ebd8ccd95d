"""
Bit-packed enumeration of binary linear spans with numpy.

A binary word of length n is a row of W = ceil(n/64) uint64 words, bit i
of the word at bit i % 64 of column i // 64. The span of k basis rows is
walked in chunks of 2^chunk_bits codewords: the low basis rows are spanned
once, and each chunk XORs that block with one combination of the high
rows. Chunks are independent, so they are farmed out to a thread pool and
their results merged in prefix order.
"""

import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterator, List, Optional, Sequence, Tuple, TypeVar

import numpy as np

logger = logging.getLogger(__name__)

WORD_BITS = 64
DEFAULT_CHUNK_BITS = 16
_MASK64 = (1 << WORD_BITS) - 1

T = TypeVar("T")


def words_per_row(n: int) -> int:
    return max(1, -(-n // WORD_BITS))


def pack_ints(values: Sequence[int], n: int) -> np.ndarray:
    """Pack Python ints (bit i = coordinate i) into an (len, W) uint64 array."""
    width = words_per_row(n)
    out = np.zeros((len(values), width), dtype=np.uint64)
    for r, v in enumerate(values):
        for w in range(width):
            out[r, w] = (int(v) >> (WORD_BITS * w)) & _MASK64
    return out


def row_to_int(row: np.ndarray) -> int:
    return int.from_bytes(np.ascontiguousarray(row, dtype="<u8").tobytes(), "little")


def rows_to_ints(rows: np.ndarray) -> List[int]:
    return [row_to_int(r) for r in rows]


def ones_row(n: int) -> np.ndarray:
    return pack_ints([(1 << n) - 1], n)[0]


def popcount_rows(rows: np.ndarray) -> np.ndarray:
    return np.bitwise_count(rows).sum(axis=-1, dtype=np.int64)


def span_rows(basis: np.ndarray) -> np.ndarray:
    """All 2^k combinations; row t is the XOR of basis rows at the set bits of t."""
    k, width = basis.shape
    out = np.zeros((1 << k, width), dtype=np.uint64)
    size = 1
    for i in range(k):
        np.bitwise_xor(out[:size], basis[i], out=out[size:2 * size])
        size *= 2
    return out


def combine_rows(basis: np.ndarray, selector: int) -> np.ndarray:
    acc = np.zeros(basis.shape[1], dtype=np.uint64)
    i = 0
    while selector:
        if selector & 1:
            acc ^= basis[i]
        selector >>= 1
        i += 1
    return acc


def iter_span_chunks(
    basis: np.ndarray,
    chunk_bits: int = DEFAULT_CHUNK_BITS,
    prefixes: Optional[Sequence[int]] = None,
) -> Iterator[Tuple[int, np.ndarray]]:
    """Yield (first message index, rows) for each chunk of the span."""
    k = basis.shape[0]
    low = min(k, chunk_bits)
    base = span_rows(basis[:low])
    high = basis[low:]
    if prefixes is None:
        prefixes = range(1 << (k - low))
    for p in prefixes:
        p = int(p)
        yield p << low, base ^ combine_rows(high, p)


def map_span_chunks(
    basis: np.ndarray,
    fn: Callable[[np.ndarray], T],
    threads: int = 1,
    chunk_bits: int = DEFAULT_CHUNK_BITS,
    stop: Optional[threading.Event] = None,
) -> List[T]:
    """Apply fn to every chunk of the span; results come back in prefix order.

    When `stop` is set by fn, workers skip their remaining chunks.
    """
    k = basis.shape[0]
    low = min(k, chunk_bits)
    count = 1 << (k - low)
    parts = np.array_split(np.arange(count), max(1, min(threads, count)))
    logger.debug(f"Spanning 2^{k} words in {count} chunk(s) over {len(parts)} partition(s)")

    def work(part: np.ndarray) -> List[T]:
        results = []
        for _, rows in iter_span_chunks(basis, chunk_bits, part):
            if stop is not None and stop.is_set():
                break
            results.append(fn(rows))
        return results

    if len(parts) == 1:
        nested = [work(parts[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(parts)) as pool:
            nested = list(pool.map(work, parts))
    return [r for chunk in nested for r in chunk]


def weight_histogram(basis: np.ndarray, n: int, threads: int = 1) -> np.ndarray:
    """Hamming weight histogram (length n + 1) of the span of `basis`."""
    if basis.shape[0] == 0:
        hist = np.zeros(n + 1, dtype=np.int64)
        hist[0] = 1
        return hist
    parts = map_span_chunks(
        basis, lambda rows: np.bincount(popcount_rows(rows), minlength=n + 1), threads
    )
    return np.sum(parts, axis=0, dtype=np.int64)


def min_nonzero_weight(
    basis: np.ndarray,
    n: int,
    threads: int = 1,
    lower_bound: int = 1,
) -> Optional[int]:
    """Smallest nonzero Hamming weight in the span, None if the span is {0}.

    Stops early once a word of weight `lower_bound` turns up, since no
    smaller weight can exist.
    """
    if basis.shape[0] == 0:
        return None
    stop = threading.Event()

    def chunk_min(rows: np.ndarray) -> int:
        w = popcount_rows(rows)
        w = w[w > 0]
        best = int(w.min()) if w.size else n + 1
        if best <= lower_bound:
            stop.set()
        return best

    best = min(map_span_chunks(basis, chunk_min, threads, stop=stop))
    return best if best <= n else None


# bit-reversal of every byte value
_REVERSED_BYTES = np.array([int(f"{b:08b}"[::-1], 2) for b in range(256)], dtype=np.uint8)


def reverse_rows(rows: np.ndarray, n: int) -> np.ndarray:
    """Reverse the first n coordinates of every packed row.

    The whole 64*W-bit row is reversed bytewise through a lookup table,
    then shifted down by 64*W - n (always below 64).
    """
    if rows.shape[0] == 0 or n == 0:
        return rows.copy()
    width = rows.shape[1]
    raw = np.ascontiguousarray(rows, dtype="<u8").view(np.uint8)
    flipped = np.ascontiguousarray(_REVERSED_BYTES[raw[:, ::-1]]).view("<u8").astype(np.uint64, copy=False)
    shift = 64 * width - n
    if shift == 0:
        return flipped
    out = flipped >> np.uint64(shift)
    if width > 1:
        out[:, :-1] |= flipped[:, 1:] << np.uint64(64 - shift)
    return out


def row_keys(rows: np.ndarray) -> np.ndarray:
    """One sortable key per row, for set operations."""
    rows = np.ascontiguousarray(rows, dtype=np.uint64)
    if rows.shape[1] == 1:
        return rows[:, 0].copy()
    fields = np.dtype([(f"w{i}", np.uint64) for i in range(rows.shape[1])])
    return rows.view(fields).ravel()


def rows_in(query: np.ndarray, reference: np.ndarray) -> np.ndarray:
    """Boolean mask: which rows of `query` also occur in `reference`."""
    return np.isin(row_keys(query), row_keys(reference))


def count_distinct_rows(rows: np.ndarray) -> int:
    return int(np.unique(row_keys(rows)).size)


def independent_rows(values: Sequence[int]) -> List[int]:
    """Row-reduce Python-int bit rows over GF(2); return a basis of their span."""
    pivots: dict = {}
    basis: List[int] = []
    for v in values:
        v = int(v)
        while v:
            top = v.bit_length() - 1
            if top not in pivots:
                pivots[top] = v
                basis.append(v)
                break
            v ^= pivots[top]
    return basis


def unpack_rows(rows: np.ndarray, n: int) -> np.ndarray:
    """(N, W) packed rows -> (N, n) array of 0/1 bits."""
    raw = np.ascontiguousarray(rows, dtype="<u8").view(np.uint8)
    return np.unpackbits(raw, axis=1, bitorder="little")[:, :n]
