"""Dimension, clique and cover analyses."""
