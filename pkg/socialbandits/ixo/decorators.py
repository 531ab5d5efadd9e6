class lazy(object):
    """
    Cached attribute for values derived from immutable objects, e.g. the degree vector of an
    :class:`socialbandits.model.network.ObservationNetwork`. The wrapped function runs on first access, its result
    replaces the descriptor on the instance.

    Example:
        ::

            @lazy
            def degrees(self):
                return self.adjacency.sum(axis=1)
    """

    def __init__(self, func):
        self.func = func
        self.__doc__ = func.__doc__

    def __get__(self, instance, owner):
        if instance is None:
            return self
        value = self.func(instance)
        # bypass __setattr__ overrides of frozen classes
        instance.__dict__[self.func.__name__] = value
        return value
