__all__ = [
    # namespace package for command modules
]
