from collections.abc import Mapping
import logging as log
import pprint

from socialbandits.ixo.collections import IndexedOrderedDict


class ConfigDict(IndexedOrderedDict):
    """
    An ordered dictionary with attribute styled element access (:class:`socialbandits.ixo.collections.AttrDictMixin`)
    that returns a default value if a key does not exist and logs that the default was used. Nested mappings are
    converted to the same class, so defaults apply on every level.
    The convention for key style is "camelCase" (start lower case, new words begin upper case).
    """

    defaults = {}

    logString = ''

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)

        for key, value in self.items():
            if isinstance(value, Mapping) and not isinstance(value, self.__class__):
                self[key] = self.__class__(value)

    def __str__(self):
        return pprint.pformat(self.toDict())

    def __getitem__(self, item):
        try:
            return super().__getitem__(item)
        except KeyError:
            try:
                value = self.defaults[item]
            except (KeyError, TypeError):
                raise KeyError(item) from None
            log.info('%sDefault value used for key: %s = %s', self.logString, item, value)
            return value

    def __getattr__(self, name):
        # only reached when regular attribute and key lookup failed
        if name in self.defaults:
            return self[name]
        raise AttributeError("'{}' object has no attribute '{}'".format(self.__class__.__name__, name))

    def update(self, *dicts, **kwargs):
        """
        Recursively update content with key/value pairs from one or more other dictionaries or given key/value pairs.
        Nested mappings are merged instead of replaced.

        Args:
            *dicts: one or multiple dictionaries to use for updating
            **kwargs: key/value pairs (e.g. ``horizon=500``) to update
        """

        todo = list(dicts)
        if kwargs:
            todo.append(kwargs)
        for el in todo:
            if not el:
                continue
            for key, value in el.items():
                if isinstance(value, Mapping):
                    if key in self.keys() and isinstance(super().__getitem__(key), ConfigDict):
                        self[key].update(value)
                    else:
                        self[key] = self.__class__(value)
                else:
                    self[key] = value



class ScenarioConfig(ConfigDict):
    """
    Scenario of an experiment, usually read by :func:`socialbandits.io.scenario.loadScenario`. Nested sections
    (``policy``, ``bounds``, ...) are `ScenarioConfig` objects as well and share the defaults below.
    """

    defaults = {
        'name': 'unnamed',
        'horizon': 500,
        'runs': 1000,
        'seed': 0,
        'jobs': 1,
        # policy
        'xi': 1.1,
        'inflation': 'performance-measure',
        # bounds
        'zeta': 2.0,
    }

    # section holding each default, None is the top level
    layout = {None: ('name', 'horizon', 'runs', 'seed', 'jobs'),
              'policy': ('xi', 'inflation'),
              'bounds': ('zeta',)}

    logString = 'Scenario: '

    def effective(self):
        """
        Copy of the scenario with every default written out, i.e. the values an experiment actually uses.

        Returns:
            :class:`ScenarioConfig`
        """

        res = self.copy()
        for section, keys in self.layout.items():
            target = res
            if section is not None:
                if section not in res.keys():
                    res[section] = self.__class__()
                target = res[section]
            for key in keys:
                if key not in target.keys():
                    target[key] = self.defaults[key]
        return res
