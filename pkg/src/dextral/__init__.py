"""Dextral symmetry of finite-dimensional algebras and Leavitt path algebras."""

__version__ = "0.1.0"
