"""klarner: fixed-polyomino counts, the inconstructible sequence Q(n) and
conditional bounds on Klarner's constant."""

__version__ = "0.1.0"

__all__ = ["__version__"]
