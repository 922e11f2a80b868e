__all__ = [
    # namespace package
]
