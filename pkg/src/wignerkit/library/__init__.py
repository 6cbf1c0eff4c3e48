"""Library (sub-library) initialization for WignerKit."""
