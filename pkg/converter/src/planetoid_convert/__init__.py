"""Planetoid raw files -> portable dataset directory."""

from .convert import PUBLISHED, ConversionError, convert
from .raw import RawBundle, load_raw
from .validate import validate

__all__ = ["PUBLISHED", "ConversionError", "RawBundle", "convert",
           "load_raw", "validate"]
