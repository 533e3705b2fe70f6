"""xxzring - thermal pairwise entanglement of XXZ spin rings with impurities."""

__version__ = "1.0.0"
