"""Hamming shells of hypercubes: codes, cycles, connectivity and certificates."""

__version__ = "0.1.0"
