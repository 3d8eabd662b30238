"""Toy sequence-to-sequence adapter for MPI call regeneration.

Consumes the toolkit's JSON Lines dataset format (input_code, input_xsbt,
label_code) and emits predictions in its exchange format.
"""
__version__ = "0.1.0"
