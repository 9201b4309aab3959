"""Enumeration of torsion parts, maximal non-crossing diagrams and the mutation graph.

Diagrams are indexed by bitmasks over full_alphabet(n): bit i stands for
the i-th element in canonical order.  Batch kernels work on numpy uint64
arrays, so ranks up to 8 fit.
"""
from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .mutation import Direction, mutate_diagram
from .polygon import (
    Diagram,
    check_rank,
    crossing_table,
    elements_of,
    full_mask,
    nc_mask,
    noncrossing_masks,
)
from .ptolemy import is_ptolemy_mask, requirement_table
from .serialize import element_to_json

WORKERS_ENV = "PTOLEMY_DN_WORKERS"
EXHAUSTIVE_MAX_N = 5
MAXIMAL_MAX_N = 6
CHUNK = 1 << 20


class ResourceGuardError(ValueError):
    """The requested enumeration is too large to run exhaustively."""


def worker_count() -> int:
    raw = os.environ.get(WORKERS_ENV)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise ValueError(f"{WORKERS_ENV} must be a positive integer, got {raw!r}") from None
    return os.cpu_count() or 1


# batch kernels -------------------------------------------------------------


def _as_u64(n: int, masks) -> np.ndarray:
    if n * n > 64:
        raise ResourceGuardError(f"batch kernels need n*n <= 64, got n={n}")
    return np.asarray(masks, dtype=np.uint64)


def batch_nc(n: int, masks) -> np.ndarray:
    masks = _as_u64(n, masks)
    full = np.uint64(full_mask(n))
    out = np.full(masks.shape, full, dtype=np.uint64)
    for i, row in enumerate(noncrossing_masks(n)):
        hit = ((masks >> np.uint64(i)) & np.uint64(1)).astype(bool)
        out[hit] &= np.uint64(row)
    return out


def batch_is_torsion(n: int, masks) -> np.ndarray:
    masks = _as_u64(n, masks)
    return batch_nc(n, batch_nc(n, masks)) == masks


def batch_is_ptolemy(n: int, masks) -> np.ndarray:
    """Vectorised Ptolemy test through the pairwise requirement table."""
    masks = _as_u64(n, masks)
    table = requirement_table(n)
    bits = [((masks >> np.uint64(i)) & np.uint64(1)).astype(bool) for i in range(n * n)]
    need = np.zeros(masks.shape, dtype=np.uint64)
    for i in range(n * n):
        for j in range(i, n * n):
            req = table[i][j] | table[j][i]
            if req:
                need[bits[i] & bits[j]] |= np.uint64(req)
    return (need & ~masks) == 0


def random_masks(n: int, count: int, seed: int, density: float = 0.5) -> np.ndarray:
    """count masks with each bit set independently with the given probability."""
    rng = np.random.default_rng(seed)
    width = n * n
    bits = rng.random((count, width)) < density
    weights = np.uint64(1) << np.arange(width, dtype=np.uint64)
    return (bits.astype(np.uint64) * weights).sum(axis=1, dtype=np.uint64)


# torsion parts -------------------------------------------------------------


def _torsion_range(args: tuple[int, int, int]) -> list[int]:
    n, lo, hi = args
    out: list[int] = []
    for start in range(lo, hi, CHUNK):
        masks = np.arange(start, min(hi, start + CHUNK), dtype=np.uint64)
        out.extend(int(m) for m in masks[batch_is_torsion(n, masks)])
    return out


def _exhaustive_masks(n: int, workers: Optional[int] = None) -> list[int]:
    if n > EXHAUSTIVE_MAX_N:
        raise ResourceGuardError(f"exhaustive enumeration needs n <= {EXHAUSTIVE_MAX_N}, got n={n}")
    total = 1 << (n * n)
    workers = workers or worker_count()
    if workers == 1 or total <= CHUNK:
        return _torsion_range((n, 0, total))
    step = -(-total // workers)
    jobs = [(n, lo, min(total, lo + step)) for lo in range(0, total, step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_torsion_range, jobs))  # map keeps range order
    return [m for part in parts for m in part]


def saturate_added(n: int, closed: int, added: int) -> int:
    """Least Ptolemy diagram containing the Ptolemy mask closed and the bits of added."""
    table = requirement_table(n)
    mask = closed
    queue = [i for i in range(n * n) if added >> i & 1 and not closed >> i & 1]
    for i in queue:
        mask |= 1 << i
    while queue:
        i = queue.pop()
        row = table[i]
        need = 0
        rest = mask
        j = 0
        while rest:
            if rest & 1:
                need |= row[j] | table[j][i]
            rest >>= 1
            j += 1
        fresh = need & ~mask
        while fresh:
            low = fresh & -fresh
            k = low.bit_length() - 1
            mask |= low
            queue.append(k)
            fresh ^= low
    return mask


def _closure_masks(n: int) -> list[int]:
    """Every Ptolemy diagram, grown from the empty diagram by single-element saturation."""
    seen = {0}
    frontier = [0]
    width = n * n
    while frontier:
        nxt = []
        for x in frontier:
            for i in range(width):
                if x >> i & 1:
                    continue
                y = saturate_added(n, x, 1 << i)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)


def torsion_masks(n: int, method: str = "exhaustive", workers: Optional[int] = None) -> list[int]:
    """Sorted masks of all torsion parts of rank n."""
    check_rank(n)
    if method == "exhaustive":
        return _exhaustive_masks(n, workers)
    if method == "closure":
        return _closure_masks(n)
    raise ValueError(f"method must be 'exhaustive' or 'closure', got {method!r}")


def enumerate_torsion_parts(n: int, method: str = "exhaustive") -> Iterator[Diagram]:
    for m in torsion_masks(n, method):
        yield Diagram.from_mask(n, m)


# maximal non-crossing ------------------------------------------------------


def _compatibility(n: int) -> list[int]:
    table = crossing_table(n)
    return [sum(1 << j for j, c in enumerate(row) if c == 0 and j != i) for i, row in enumerate(table)]


def maximal_noncrossing_masks(n: int) -> list[int]:
    """Maximal pairwise non-crossing diagrams, by Bron-Kerbosch with pivoting."""
    check_rank(n)
    if n > MAXIMAL_MAX_N:
        raise ResourceGuardError(f"maximal enumeration needs n <= {MAXIMAL_MAX_N}, got n={n}")
    adj = _compatibility(n)
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pu = p | x
        pivot = max(_bits(pu), key=lambda u: bin(adj[u] & p).count("1"))
        cand = p & ~adj[pivot]
        for v in _bits(cand):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    expand(0, full_mask(n), 0)
    return sorted(out)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def enumerate_maximal_noncrossing(n: int) -> tuple[int, list[Diagram]]:
    masks = maximal_noncrossing_masks(n)
    return len(masks), [Diagram.from_mask(n, m) for m in masks]


def is_maximal_noncrossing_mask(n: int, mask: int) -> bool:
    """Pairwise non-crossing and not extendable: nc(X) == X."""
    return nc_mask(n, mask) == mask


# mutation graph ------------------------------------------------------------


@dataclass
class MutationGraph:
    n: int
    nodes: list[int] = field(default_factory=list)
    edges: list[tuple[int, int, str, int]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "nodes": [
                {"id": m, "elements": [element_to_json(e) for e in elements_of(self.n, m)]}
                for m in self.nodes
            ],
            "edges": [{"x": x, "d": d, "dir": dr, "x2": x2} for x, d, dr, x2 in self.edges],
        }


def _submasks(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def mutation_edges(n: int, x: int) -> list[tuple[int, int, str, int]]:
    """All edges (X, D, dir, X') for D inside X ∩ nc(X)."""
    xd = Diagram.from_mask(n, x)
    out = []
    for d in sorted(_submasks(x & nc_mask(n, x))):
        dd = Diagram.from_mask(n, d)
        for direction in (Direction.PLUS, Direction.MINUS):
            x2 = mutate_diagram(dd, xd, direction).mask
            out.append((x, d, direction.name.lower(), x2))
    return out


class SeedError(ValueError):
    pass


def build_mutation_graph(n: int, seeds: Optional[Sequence[Diagram]] = None) -> MutationGraph:
    """Closure of the seeds under every admissible diagram mutation.

    seeds=None starts from every Ptolemy diagram of rank n.
    """
    check_rank(n)
    if seeds is None:
        start = torsion_masks(n, "closure")
    else:
        start = []
        for s in seeds:
            if s.n != n:
                raise SeedError(f"seed has rank {s.n}, expected {n}")
            if not is_ptolemy_mask(n, s.mask):
                raise SeedError(f"seed {s!r} is not a Ptolemy diagram")
            start.append(s.mask)
    seen = set(start)
    frontier = sorted(seen)
    edges = []
    while frontier:
        nxt = []
        for x in frontier:
            for edge in mutation_edges(n, x):
                edges.append(edge)
                x2 = edge[3]
                if x2 not in seen:
                    seen.add(x2)
                    nxt.append(x2)
        frontier = sorted(nxt)
    edges.sort(key=lambda e: (e[0], e[1], e[2]))
    return MutationGraph(n, sorted(seen), edges)


# persistence ---------------------------------------------------------------


def census_records(n: int, masks: Iterable[int]) -> Iterator[dict]:
    for idx, m in enumerate(masks):
        yield {
            "id": idx,
            "mask": m,
            "elements": [element_to_json(e) for e in elements_of(n, m)],
            "is_maximal_noncrossing": is_maximal_noncrossing_mask(n, m),
        }


def census_jsonl(n: int, masks: Iterable[int]) -> str:
    return "".join(json.dumps(r, sort_keys=True) + "\n" for r in census_records(n, masks))


def all_noncrossing_masks(n: int) -> list[int]:
    """Every pairwise non-crossing diagram, as the down-closure of the maximal ones."""
    seen: set[int] = set()
    for top in maximal_noncrossing_masks(n):
        seen.update(_submasks(top))
    return sorted(seen)


__all__ = [
    "MutationGraph",
    "ResourceGuardError",
    "SeedError",
    "all_noncrossing_masks",
    "batch_is_ptolemy",
    "batch_is_torsion",
    "batch_nc",
    "build_mutation_graph",
    "census_jsonl",
    "enumerate_maximal_noncrossing",
    "enumerate_torsion_parts",
    "maximal_noncrossing_masks",
    "random_masks",
    "torsion_masks",
]
