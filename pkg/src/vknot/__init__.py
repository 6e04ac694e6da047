"""vknot: exact combinatorial invariants of virtual knots, links and braids."""

__version__ = "0.1.0"
