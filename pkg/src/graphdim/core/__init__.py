"""Graph representation and shared value types."""
