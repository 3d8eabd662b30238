"""Corpus construction and evaluation toolkit for MPI parallelization assistance."""

__version__ = "0.1.0"
