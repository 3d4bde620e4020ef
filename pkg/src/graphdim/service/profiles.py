# src/service/profiles.py
from dataclasses import fields

from graphdim.errors import GraphValidationError
from graphdim.utils.suite_config import SuiteConfig

SUITE_PROFILES = {
    # =========================
    # ACCEPTANCE
    # =========================
    "acceptance": {
        "max_n": 8,
        "random_trees": 50,
        "join_pairs": 200,
        "join_triples": 50,
        "union_graphs": 200,
        "theorem4_samples": 500,
        "pure_graphs": 100,
        "ecc_instances": 300,
        "oracle_graphs": 300,
        "max_oracle_order": 9,
        "relabelings": 5,
        "clique_graphs": 200,
        "perf_n": 25,
    },

    # =========================
    # QUICK
    # =========================
    "quick": {
        "max_n": 7,
        "random_trees": 10,
        "join_pairs": 20,
        "join_triples": 8,
        "union_graphs": 20,
        "theorem4_samples": 40,
        "pure_graphs": 12,
        "ecc_instances": 30,
        "oracle_graphs": 30,
        "max_oracle_order": 8,
        "relabelings": 2,
        "clique_graphs": 30,
        "perf_n": 18,
    },
}


def suite_config_for(profile: str, **overrides) -> SuiteConfig:
    if profile not in SUITE_PROFILES:
        raise GraphValidationError(f"Unknown suite profile: {profile}")

    known = {f.name for f in fields(SuiteConfig)}
    unknown = sorted(set(overrides) - known)
    if unknown:
        raise GraphValidationError(f"Unknown SuiteConfig fields: {unknown}")

    values = dict(SUITE_PROFILES[profile])
    values.update({k: v for k, v in overrides.items() if v is not None})
    values["profile"] = profile
    return SuiteConfig(**values)
