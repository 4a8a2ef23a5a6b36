"""catterm: free monoidal-category terms, models, linear proofs and lambda calculi."""

__version__ = "0.1.0"
