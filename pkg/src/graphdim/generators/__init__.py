"""Deterministic graph families and seeded random graphs."""
