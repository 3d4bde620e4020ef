"""Pinned regression values."""
