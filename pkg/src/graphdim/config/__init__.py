"""Stored engine configurations."""
