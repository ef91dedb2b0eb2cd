"""Brute-force checks over the monomial groups G(r,p,l)."""

from .kernels import BACKEND
from .verify import verify_family, verify_group

__all__ = ["BACKEND", "verify_family", "verify_group"]
