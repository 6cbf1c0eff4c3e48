"""Support (sub-library) initialization for WignerKit."""
