# utils/suite_config.py
from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class SuiteConfig:
    profile: str
    seed: int = 0
    max_n: int = 8
    corpus_path: Optional[str] = None
    workers: int = 1

    # Base values
    random_trees: int = 50
    max_tree_order: int = 20

    # Join / union laws
    join_pairs: int = 200
    max_join_order: int = 14
    join_triples: int = 50
    max_triple_order: int = 13
    union_graphs: int = 200
    max_union_order: int = 16

    # Cover formula, pure graphs, ECC
    theorem4_samples: int = 500
    pure_graphs: int = 100
    max_pure_order: int = 14
    ecc_instances: int = 300
    max_ecc_order: int = 7

    # Oracles
    oracle_graphs: int = 300
    max_oracle_order: int = 9
    relabelings: int = 5
    clique_graphs: int = 200
    max_clique_order: int = 7

    # Performance smoke test
    perf_n: int = 25
    perf_p: str = "1/4"
    perf_seed: int = 0
    perf_limit_seconds: float = 30.0
    unmemoized_max_n: int = 12
