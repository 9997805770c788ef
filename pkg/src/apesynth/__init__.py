"""apesynth: synthesize APE (SRC, MT, PE) triplets from a parallel corpus."""

__version__ = "0.1.0"
