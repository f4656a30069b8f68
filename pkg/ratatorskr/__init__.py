"""
Ratatorskr Command-Line Module

This module contains the click command surface for the mimir groupoid toolkit.
"""

from .client import create_cli
from .utils import emit

__all__ = ['create_cli', 'emit']
