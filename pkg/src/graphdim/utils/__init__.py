"""Configuration dataclasses and logging setup."""
