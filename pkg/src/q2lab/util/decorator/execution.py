"""
Decorators related to reshaping program execution flows.
"""
__all__ = ["lazy_property"]


class lazy_property(object):
    """
    Evaluate the wrapped method once, on first access, and store the value as an
    instance attribute of the same name so later lookups bypass the descriptor.
    """

    def __init__(self, func):
        self._func = func
        self.__doc__ = func.__doc__

    def __get__(self, instance, owner):
        if instance is None:
            return self
        value = self._func(instance)
        setattr(instance, self._func.__name__, value)
        return value
