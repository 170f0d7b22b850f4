"""siclie: SIC-POVM construction and Lie-algebraic verification."""

__version__ = "0.1.0"
