"""Package initialization for WignerKit testing code."""
