"""
Command-line package.

Argparse front end over the domain services: codec and set operations,
formula translation and classification, evaluation, stage and axiom
checks, round trips and the acceptance self-test.
"""

from src.cli.main import main

__all__ = [
    "main",
]
