# Initialize as subpackage
__all__ = []
