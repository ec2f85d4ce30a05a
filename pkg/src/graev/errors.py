class ResourceLimitError(RuntimeError):
    """A computation would exceed a configured enumeration or search cap."""
