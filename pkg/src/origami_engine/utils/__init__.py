"""Utility modules for I/O, logging, etc."""
