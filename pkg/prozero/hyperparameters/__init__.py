"""
YAML backed parameter files (engine defaults, project configurations).
"""

import logging
import os

from ruamel.yaml import YAML

_LOGGER = logging.getLogger(__name__)


class YAMLHParams(dict):
    """
    Dictionary holding the key-value pairs of a YAML parameter file. Values
    may be updated with 'set_value' and written back with 'save_current'.
    """
    def __init__(self, yaml_path, no_log=False, logger=None):
        """
        Args:
            yaml_path: (str)    Path to a .yaml file
            no_log:    (bool)   Do not log the loaded values
            logger:    (Logger) Optional logger, defaults to module logger
        """
        super(YAMLHParams, self).__init__()
        self.logger = logger or _LOGGER
        self.yaml_path = os.path.abspath(yaml_path)
        if not os.path.exists(self.yaml_path):
            raise OSError("YAML path '{}' does not exist".format(yaml_path))
        with open(self.yaml_path, "r") as in_f:
            loaded = YAML(typ="safe", pure=True).load(in_f) or {}
        if not isinstance(loaded, dict):
            raise ValueError("YAML file '{}' does not hold a mapping at its "
                             "top level".format(yaml_path))
        self.update(loaded)
        if not no_log:
            self.logger.debug("Loaded parameters from {}: {}".format(
                self.yaml_path, dict(self)
            ))

    def set_value(self, name, value, overwrite=False):
        """
        Sets 'name' to 'value'. An existing value is only replaced if
        'overwrite' is True.

        Returns:
            bool, True if the value was set
        """
        if name in self and not overwrite:
            self.logger.warning("Not overwriting existing value for '{}' "
                                "({})".format(name, self[name]))
            return False
        self[name] = value
        return True

    def save_current(self, out_path=None):
        """ Writes the current values to 'out_path' (default: the loaded file) """
        out_path = os.path.abspath(out_path or self.yaml_path)
        yaml = YAML(typ="safe", pure=True)
        yaml.default_flow_style = False
        with open(out_path, "w") as out_f:
            yaml.dump(dict(self), out_f)
        return out_path
