"""Experiments comparing graphs with their line graphs."""
