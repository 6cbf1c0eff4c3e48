"""Core (sub-library) initialization for WignerKit."""
