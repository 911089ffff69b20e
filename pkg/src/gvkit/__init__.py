"""Groebner-basis certificates for the w-operation, plus a finite-ring lab."""

__version__ = "0.1.0"
