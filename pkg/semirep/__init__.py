"""semirep: Green's relations and irreducible representations of finite semigroups."""

__version__ = "0.1.0"
