"""Search and certification tools for Ramsey numbers of edge-ordered graphs."""

__version__ = "0.1.0"
