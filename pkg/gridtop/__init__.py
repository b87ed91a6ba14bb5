"""Total cut and cut complexes of grid graphs: construction, homology, shellings and Morse matchings."""

__version__ = "0.1.0"
