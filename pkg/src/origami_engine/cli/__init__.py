"""Command-line entry point and SVG rendering."""
