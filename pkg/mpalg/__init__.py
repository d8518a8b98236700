"""mpalg - exact computation in the multiset partition algebra."""

__version__ = "0.1.0"
