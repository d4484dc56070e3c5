from .Arguments import Arguments
from .Settings import Settings

__all__ = ["Arguments", "Settings"]
