from collections import OrderedDict
import copy

import numpy as np


class AttrDictMixin(object):
    """
    Attribute access for mapping keys, so ``cfg.horizon`` reads ``cfg['horizon']``. Real attributes (methods, class
    level settings such as `defaults`) take precedence over keys of the same name.
    """

    def __getattribute__(self, name):
        # keys are listed in __dir__, which rules out relying on __getattr__ alone
        try:
            return super().__getattribute__(name)
        except AttributeError:
            pass
        if name in self.keys():
            return self[name]
        raise AttributeError("'{}' object has no attribute '{}'".format(self.__class__.__name__, name))

    def __setattr__(self, name, value):
        if name in super().__dir__():
            super().__setattr__(name, value)
        else:
            self[name] = value

    def __delattr__(self, name):
        if name in super().__dir__():
            super().__delattr__(name)
        elif name in self.keys():
            del self[name]
        else:
            raise AttributeError("'{}' object has no attribute '{}'".format(self.__class__.__name__, name))

    def __dir__(self):
        return super().__dir__() + list(self.keys())


class IndexedOrderedDict(AttrDictMixin, OrderedDict):
    """
    Ordered dictionary with attribute access (:class:`AttrDictMixin`) and positional access, ``d[0]`` is the value of
    the first key unless 0 itself is a key.

    Used for scenario configurations and for the reports assembled from simulation results.
    """

    def __getitem__(self, item):
        if isinstance(item, int) and item not in self.keys():
            # numeric indexing
            key = list(self.keys())[item]
            return self[key]
        return super().__getitem__(item)

    def copy(self):
        """
        Returns a deep copy of the object

        Returns:
            same type as object
        """

        return copy.deepcopy(self)

    def toDict(self):
        """
        Convert to nested plain Python containers (``dict``, ``list``, ``float``, ``int``), e.g. for JSON export.
        Numpy arrays and scalars are converted to their Python counterparts.

        Returns:
            `dict`
        """

        return toPlain(self)


def toPlain(value):
    """
    Recursively convert mappings, sequences and numpy types to plain Python containers.

    Args:
        value: value to convert

    Returns:
        plain Python value
    """

    if isinstance(value, dict):
        return OrderedDict((key, toPlain(item)) for key, item in value.items())
    if isinstance(value, np.ndarray):
        return [toPlain(item) for item in value.tolist()]
    if isinstance(value, (list, tuple)):
        return [toPlain(item) for item in value]
    if isinstance(value, np.generic):
        return value.item()
    return value


def dictStructure(dictionary, indent=4, level=0):
    """
    Render a nested dictionary as indented ``key: value`` lines, e.g. for the parameter echo of a report.

    Args:
        dictionary (`dict`): dictionary to traverse
        indent (`int`): number of spaces to indent a level
        level (`int`): current level of indentation

    Returns:
        `str`
    """

    if not isinstance(dictionary, dict):
        raise AttributeError('dictStructure: No dict given')

    indentString = ' ' * indent * level
    content = ''
    for key, item in dictionary.items():
        if isinstance(item, dict):
            content += '{}{}:\n'.format(indentString, key)
            content += dictStructure(item, indent=indent, level=level + 1)
        else:
            content += '{}{}: {}\n'.format(indentString, key, toPlain(item))

    return content
