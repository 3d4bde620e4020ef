"""Law verification, the acceptance suite and configuration assembly."""
