import os

import yaml
from yaml.loader import SafeLoader

DEFAULT_CONFIG = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'kernel_config.yaml')


class Config:
    def __init__(self, **entries):
        self.__dict__.update(entries)

    def get(self, key, default=None):
        return self.__dict__.get(key, default)


def get_configs(config_file=None):
    return _load_config_yaml(config_file or os.environ.get('FFKERNEL_CONFIG', DEFAULT_CONFIG))


def _load_config_yaml(config_file):
    if not os.path.exists(config_file):
        raise IOError("Config '{}' does not exist".format(config_file))
    with open(config_file, 'rb') as f:
        config_dict = yaml.load(f, SafeLoader)
    return Config(**config_dict)
