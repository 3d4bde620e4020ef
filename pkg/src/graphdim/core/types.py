from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import enum

from graphdim.core.graph import VertexSet


class GraphFormat(str, enum.Enum):
    EDGE_LIST = "edge_list"
    GRAPH6 = "graph6"
    DOT = "dot"


class Law(str, enum.Enum):
    JOIN = "join"
    UNION = "union"
    THEOREM4 = "theorem4"
    BALL = "ball"
    BOUNDS = "bounds"
    ALL = "all"


class GenFamily(str, enum.Enum):
    COMPLETE = "complete"
    CYCLE = "cycle"
    PATH = "path"
    STAR_CLIQUE = "star_clique"
    INFLATED_CUBE = "inflated_cube"
    DOUBLE_CLIQUE_MATCHING = "double_clique_matching"
    WINDMILL = "windmill"
    PURE_GLUED = "pure_glued"
    ERDOS_RENYI = "erdos_renyi"
    EDGELESS = "edgeless"
    PETERSEN = "petersen"
    RANDOM_TREE = "random_tree"


@dataclass(frozen=True)
class DimReport:
    n: int
    graph_dim: Fraction
    vertex_dims: tuple[Fraction, ...]
    is_uniform: bool
    is_pure: bool
    omega: int | None
    gamma: int | None


@dataclass(frozen=True)
class CliqueCover:
    cliques: tuple[VertexSet, ...]
    # set when the input had no edges to cover
    edgeless: bool = False

    @property
    def size(self) -> int:
        return len(self.cliques)


@dataclass(frozen=True)
class CoverCheck:
    valid: bool
    uncovered_edges: tuple[tuple[int, int], ...] = ()
    non_cliques: tuple[VertexSet, ...] = ()


@dataclass(frozen=True)
class SignatureCounts:
    """Vertices per exact set of cover indices (0-based) that contain them."""

    counts: dict[frozenset[int], int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def get(self, indices: frozenset[int]) -> int:
        return self.counts.get(indices, 0)


@dataclass(frozen=True)
class PureCheck:
    dim: Fraction
    expected: Fraction
    vertex_dims_ok: bool


@dataclass(frozen=True)
class BoundsReport:
    n: int
    omega: int
    gamma: int
    connected: bool
    dim: Fraction
    lower_basic: Fraction
    lower_connected: Fraction | None
    lower_clique: Fraction
    upper: Fraction
    saturated_lower: bool
    saturated_connected: bool
    saturated_upper: bool

    def violations(self) -> list[str]:
        problems: list[str] = []
        if self.dim < self.lower_basic:
            problems.append(f"dim {self.dim} below k(k-1)/|G| = {self.lower_basic}")
        if self.dim > self.upper:
            problems.append(f"dim {self.dim} above k-1 = {self.upper}")
        if self.lower_connected is not None and self.dim < self.lower_connected:
            problems.append(f"dim {self.dim} below connected bound {self.lower_connected}")
        if self.connected and self.dim < self.lower_clique:
            problems.append(f"dim {self.dim} below gamma-1 = {self.lower_clique}")
        return problems


@dataclass(frozen=True)
class LawCheck:
    law: Law
    passed: bool
    details: dict = field(default_factory=dict)
