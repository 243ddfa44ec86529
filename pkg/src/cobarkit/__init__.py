"""Chain-level invariants of finite reduced simplicial sets via the cobar construction."""

__version__ = "0.1.0"
