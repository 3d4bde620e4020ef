"""Graph file formats."""
