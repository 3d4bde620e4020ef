"""Analysis reports and JSON emission."""
