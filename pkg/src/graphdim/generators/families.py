from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Sequence

import numpy as np
from loguru import logger

from graphdim.analysis.cliques import maximal_cliques
from graphdim.core.graph import Graph, complete, disjoint_union, edgeless, from_edges, join_all
from graphdim.core.rational import parse_rational
from graphdim.core.types import GenFamily
from graphdim.errors import GraphValidationError, ResourceLimitError

# Every random family draws from numpy's PCG64 bit generator seeded with
# the caller's 64-bit seed. Pinned regression values depend on this choice.
SEED_LIMIT = 1 << 64
DEFAULT_PURE_GLUED_ATTEMPTS = 1000
INT64_DRAW_LIMIT = int(np.iinfo(np.int64).max)


def rng_for(seed: int) -> np.random.Generator:
    if not 0 <= seed < SEED_LIMIT:
        raise GraphValidationError(f"Seed must be a 64-bit unsigned integer, got {seed}")
    return np.random.Generator(np.random.PCG64(seed))


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise GraphValidationError(message)


# =========================
# DETERMINISTIC FAMILIES
# =========================
def cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_clique(k: int, n: int) -> Graph:
    """
    K_k core (vertices 0..k-1) with n-k leaves dealt round-robin over the
    core, so core degrees differ by at most one. Saturates the lower
    bound for connected graphs.
    """
    _require(k >= 2, f"star_clique needs k >= 2, got {k}")
    _require(k <= n, f"star_clique needs k <= n, got k={k} n={n}")
    edges = list(combinations(range(k), 2))
    edges.extend((leaf % k, k + leaf) for leaf in range(n - k))
    return from_edges(n, edges)


def inflated_cube() -> Graph:
    """
    Each cube vertex x becomes the block K_4 on ids 4x..4x+3; every cube
    edge xy becomes the matching 4x+i -- 4y+i. Every unit sphere is
    K_3 plus three isolated vertices.
    """
    edges: list[tuple[int, int]] = []
    for x in range(8):
        edges.extend((4 * x + i, 4 * x + j) for i, j in combinations(range(4), 2))
        for bit in range(3):
            y = x ^ (1 << bit)
            if x < y:
                edges.extend((4 * x + i, 4 * y + i) for i in range(4))
    return from_edges(32, edges)


def double_clique_matching(c: int) -> Graph:
    _require(c >= 2, f"double_clique_matching needs c >= 2, got {c}")
    edges = list(combinations(range(c), 2))
    edges.extend((c + i, c + j) for i, j in combinations(range(c), 2))
    edges.extend((i, c + i) for i in range(c))
    return from_edges(2 * c, edges)


def windmill(t: int) -> Graph:
    """t triangles sharing vertex 0."""
    _require(t >= 1, f"windmill needs t >= 1, got {t}")
    edges: list[tuple[int, int]] = []
    for j in range(t):
        a, b = 2 * j + 1, 2 * j + 2
        edges.extend([(0, a), (0, b), (a, b)])
    return from_edges(2 * t + 1, edges)


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges.extend((i, i + 5) for i in range(5))
    edges.extend((5 + i, 5 + (i + 2) % 5) for i in range(5))
    return from_edges(10, edges)


def complete_multipartite(parts: Sequence[int]) -> Graph:
    return join_all([edgeless(size) for size in parts])


def clique_plus_isolated(k: int, extra: int) -> Graph:
    return disjoint_union(complete(k), edgeless(extra))


# =========================
# SEEDED FAMILIES
# =========================
def _tree_edges(rng: np.random.Generator, n: int) -> list[tuple[int, int]]:
    return [(int(rng.integers(0, v)), v) for v in range(1, n)]


def _uniform_below(rng: np.random.Generator, bound: int) -> int:
    """Uniform draw from [0, bound) for bounds past int64, by rejection on raw 64-bit words."""
    bits = bound.bit_length()
    words = -(-bits // 64)
    while True:
        value = 0
        for word in rng.bit_generator.random_raw(words):
            value = (value << 64) | int(word)
        value >>= words * 64 - bits
        if value < bound:
            return value


def _random_edges(rng: np.random.Generator, n: int, p: Fraction) -> list[tuple[int, int]]:
    pairs = list(combinations(range(n), 2))
    if not pairs:
        return []
    if p.denominator > INT64_DRAW_LIMIT:
        draws = [_uniform_below(rng, p.denominator) for _ in pairs]
    else:
        draws = rng.integers(0, p.denominator, size=len(pairs))
    return [pair for pair, draw in zip(pairs, draws) if draw < p.numerator]


def _check_probability(p: Fraction | int | str) -> Fraction:
    p = parse_rational(p) if isinstance(p, str) else Fraction(p)
    _require(0 <= p <= 1, f"Edge probability must lie in [0, 1], got {p}")
    return p


def erdos_renyi(n: int, p: Fraction | int | str, seed: int) -> Graph:
    """
    G(n, p): pair (i, j), i < j, in row-major order is kept iff a uniform
    draw from [0, q) is below the numerator of p = num/q. Denominators
    past int64 are drawn from raw 64-bit words instead of numpy integers.
    """
    _require(n >= 0, f"erdos_renyi needs n >= 0, got {n}")
    p = _check_probability(p)
    return from_edges(n, _random_edges(rng_for(seed), n, p))


def random_tree(n: int, seed: int) -> Graph:
    _require(n >= 1, f"random_tree needs n >= 1, got {n}")
    return from_edges(n, _tree_edges(rng_for(seed), n))


def random_connected(n: int, p: Fraction | int | str, seed: int) -> Graph:
    """A random spanning tree plus G(n, p) edges."""
    _require(n >= 1, f"random_connected needs n >= 1, got {n}")
    p = _check_probability(p)
    rng = rng_for(seed)
    edges = set(_tree_edges(rng, n))
    edges.update(_random_edges(rng, n, p))
    return from_edges(n, sorted(edges))


def pure_glued(
    n: int,
    order: int,
    seed: int,
    *,
    max_attempts: int = DEFAULT_PURE_GLUED_ATTEMPTS,
) -> Graph:
    """
    Grow a pure graph by gluing K_order blocks onto existing blocks.

    Each step shares between 1 and order-2 vertices of one existing block
    (more only when the remaining vertex count forces it) and adds the
    rest as new vertices. A step whose result has a maximal clique of any
    order other than ``order`` is rejected and redrawn.
    """
    _require(order >= 2, f"pure_glued needs clique order >= 2, got {order}")
    _require(n >= order, f"pure_glued needs n >= clique order, got n={n} order={order}")
    rng = rng_for(seed)

    blocks: list[tuple[int, ...]] = [tuple(range(order))]
    edges: set[tuple[int, int]] = set(combinations(range(order), 2))
    count = order
    rejected = 0

    while count < n:
        remaining = n - count
        low = max(1, order - remaining)
        high = max(low, order - 2)
        shared_size = int(rng.integers(low, high + 1))
        base = blocks[int(rng.integers(0, len(blocks)))]
        shared = sorted(int(v) for v in rng.choice(base, size=shared_size, replace=False))
        fresh = list(range(count, count + order - shared_size))
        block = tuple(shared + fresh)

        trial_edges = edges | set(combinations(block, 2))
        trial = from_edges(count + len(fresh), trial_edges)
        if {len(clique) for clique in maximal_cliques(trial)} != {order}:
            rejected += 1
            if rejected > max_attempts:
                raise ResourceLimitError(
                    f"pure_glued rejection budget {max_attempts} exhausted (n={n}, order={order})"
                )
            continue

        edges = trial_edges
        blocks.append(block)
        count += len(fresh)

    graph = from_edges(n, sorted(edges))
    if {len(clique) for clique in maximal_cliques(graph)} != {order}:
        raise ResourceLimitError(f"pure_glued produced an impure graph (n={n}, order={order})")
    if rejected:
        logger.debug("pure_glued n={} order={} rejected {} steps", n, order, rejected)
    return graph


# =========================
# GENERATION SPECS
# =========================
@dataclass(frozen=True)
class GenSpec:
    family: GenFamily
    params: dict[str, int | Fraction] = field(default_factory=dict)
    seed: int = 0


_BUILDERS: dict[GenFamily, tuple[tuple[str, ...], Callable[..., Graph]]] = {
    GenFamily.COMPLETE: (("n",), lambda p, s: complete(p["n"])),
    GenFamily.EDGELESS: (("n",), lambda p, s: edgeless(p["n"])),
    GenFamily.CYCLE: (("n",), lambda p, s: cycle(p["n"])),
    GenFamily.PATH: (("n",), lambda p, s: path(p["n"])),
    GenFamily.STAR_CLIQUE: (("k", "n"), lambda p, s: star_clique(p["k"], p["n"])),
    GenFamily.INFLATED_CUBE: ((), lambda p, s: inflated_cube()),
    GenFamily.DOUBLE_CLIQUE_MATCHING: (("c",), lambda p, s: double_clique_matching(p["c"])),
    GenFamily.WINDMILL: (("t",), lambda p, s: windmill(p["t"])),
    GenFamily.PETERSEN: ((), lambda p, s: petersen()),
    GenFamily.PURE_GLUED: (("n", "N"), lambda p, s: pure_glued(p["n"], p["N"], s)),
    GenFamily.ERDOS_RENYI: (("n", "p"), lambda p, s: erdos_renyi(p["n"], p["p"], s)),
    GenFamily.RANDOM_TREE: (("n",), lambda p, s: random_tree(p["n"], s)),
}


def parse_params(text: str) -> dict[str, int | Fraction]:
    """Parse ``k=4,n=12`` or ``n=8,p=1/2``."""
    params: dict[str, int | Fraction] = {}
    for item in filter(None, (chunk.strip() for chunk in text.split(","))):
        name, sep, raw = item.partition("=")
        if not sep or not name.strip() or not raw.strip():
            raise GraphValidationError(f"Malformed generator parameter {item!r}")
        raw = raw.strip()
        if "/" in raw or "." in raw:
            params[name.strip()] = parse_rational(raw)
        else:
            try:
                params[name.strip()] = int(raw)
            except ValueError as exc:
                raise GraphValidationError(f"Malformed generator parameter {item!r}") from exc
    return params


def build_graph(spec: GenSpec) -> Graph:
    family = GenFamily(spec.family)
    required, builder = _BUILDERS[family]
    missing = [name for name in required if name not in spec.params]
    if missing:
        raise GraphValidationError(f"Missing parameters for {family.value}: {missing}")
    unknown = sorted(set(spec.params) - set(required))
    if unknown:
        raise GraphValidationError(f"Unknown parameters for {family.value}: {unknown}")
    for name in required:
        value = spec.params[name]
        if name != "p" and (not isinstance(value, int) or isinstance(value, bool)):
            raise GraphValidationError(f"Parameter {name} must be an integer, got {value}")
    return builder(spec.params, spec.seed)
