"""Configuration modules for engine settings and axiom levels."""
