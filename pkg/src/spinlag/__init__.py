"""Exact verification toolkit for SL(2,C) moment maps, the triple-tensor trace
identity, Dolbeault calculus on P^1 and genus-2 trope geometry."""

__version__ = "0.1.0"
