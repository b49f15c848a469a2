"""Cycle constructions in hypercubes and Hamming shells."""

from .blocks import Block, CallbackBlock, Composite, CubeBlock, CycleBlock, SliceShell
from .core import Cycle, canonical_order, cycle_through_edge, hamiltonian_two_edges, q3_shell_hamiltonian
from .engine import EmbedRequest, ShellBlock, canonical_shell, shell_block, shell_cycle
from .search import search_cycle

__all__ = [
    "Block", "CallbackBlock", "Composite", "CubeBlock", "CycleBlock", "SliceShell",
    "Cycle", "canonical_order", "cycle_through_edge", "hamiltonian_two_edges",
    "q3_shell_hamiltonian", "EmbedRequest", "ShellBlock", "canonical_shell",
    "shell_block", "shell_cycle", "search_cycle",
]
