""" Configuration loading: packaged defaults, a user YAML file, then explicit overrides """

import logging
from fractions import Fraction
from importlib import resources
from typing import Any, Dict, Optional

import yaml

from tin_common.errors import PreconditionError

__all__ = ["get_default_config", "get_builder_baseline", "load_config", "clean_value"]

logger = logging.getLogger(__name__)

DEFAULTS_RESOURCE = "resources/defaults.yaml"
BASELINE_RESOURCE = "resources/builder_baseline.yaml"


def clean_value(value):
    """Treat the string 'None' as unset."""
    return None if value == "None" else value


def get_default_config() -> Dict[str, Any]:
    """ Load the packaged defaults """
    text = resources.files("tin_common").joinpath(DEFAULTS_RESOURCE).read_text(encoding="utf-8")
    return {key: clean_value(value) for key, value in yaml.safe_load(text).items()}


def get_builder_baseline() -> Dict[int, Fraction]:
    """ Load the committed alpha-width / tin ratios of the builder, keyed by vertex count """
    text = resources.files("tin_common").joinpath(BASELINE_RESOURCE).read_text(encoding="utf-8")
    loaded = yaml.safe_load(text)
    return {int(n): Fraction(str(ratio)) for n, ratio in loaded["max_ratio"].items()}


def load_config(path: Optional[str] = None, overrides: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """Merge the defaults, the YAML file at `path` and `overrides`.

    The file may hold the keys at top level or under a ``params``
    section. Override entries whose value is None are ignored.

    :raises PreconditionError: when the file is not a YAML mapping or
        names an unknown key
    """
    config = get_default_config()
    if path:
        with open(path, encoding="utf-8") as handle:
            loaded = yaml.safe_load(handle) or {}
        if not isinstance(loaded, dict):
            raise PreconditionError(cause="configuration %s is not a mapping" % path)
        params = loaded.get("params", loaded)
        unknown = sorted(set(params) - set(config) - {"commands"})
        if unknown:
            raise PreconditionError(cause="unknown configuration keys %s in %s" % (unknown, path))
        for key, value in params.items():
            config[key] = clean_value(value)
        logger.debug(f"configuration loaded from {path}")
    for key, value in (overrides or {}).items():
        if value is not None:
            config[key] = value
    return config
