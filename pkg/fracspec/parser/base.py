"""General module for the FRACSPEC input files.

Provides a wrapper selecting the parser from the file extension.

"""

import os
import typing as tp

from fracspec.base.errors import ConfigError
from fracspec.parser import config

# ================
# Module Constants
# ================

CONFIG_FORMATS = {
    'ini': 'ini',
    'cfg': 'ini',
    'conf': 'ini',
    'json': 'json',
}


# ==============
# Module Classes
# ==============

class ConfigFile(object):
    """Create a configuration file object.

    The file type is detected from the file extension but can be
    overridden.

    Parameters
    ----------
    filename
        Filename.
    filetype
        Filetype.
        Supported: 'ini', 'json'

    Raises
    ------
    FileNotFoundError
        Missing file.
    ConfigError
        Unsupported file type.
    """

    def __init__(self, filename: str,
                 filetype: tp.Optional[str] = None) -> None:
        if filetype is None:
            ftype = os.path.splitext(filename)[1][1:].lower()
        else:
            ftype = filetype.lower()
        if ftype not in CONFIG_FORMATS:
            raise ConfigError('filetype', f'Unsupported filetype: {ftype}')
        if not os.path.exists(filename):
            raise FileNotFoundError(f'Configuration file not found: '
                                    f'{filename}')
        self.__fname = filename
        self.__ftype = CONFIG_FORMATS[ftype]

    @property
    def filename(self) -> str:
        """Name of the configuration file."""
        return self.__fname

    @property
    def filetype(self) -> str:
        """Format of the file."""
        return self.__ftype

    def get_config(self) -> config.RunConfig:
        """Parse the file and return the validated configuration."""
        if self.__ftype == 'ini':
            return config.parse_inifile(self.__fname)
        return config.parse_jsonfile(self.__fname)
