import logging
import os

from flask import Config

from .__version__ import __version__

DEFAULTS = {
    "MAX_N": 64,
    "ORACLE_MAX_N": 10,
    "EXHAUSTIVE_TIES": True,
    "ORDERING_CHECK_LIMIT": 200000,
    "TIE_LIMIT": 10000,
    "TIE_NODE_LIMIT": 200000,
    "LOG_LEVEL": os.getenv('LOG_LEVEL', "INFO"),
}


def create_config(test_config=None, config_file=None):
    """
    Build the chromastat configuration.
    Defaults are overwritten by CHROMASTAT_* env vars, then by the config
    file (if any) or by test_config when testing.
    """
    config = Config(os.getcwd())
    config.from_mapping(DEFAULTS)
    # Will overwrite default MAX_N if CHROMASTAT_MAX_N env var is set
    config.from_prefixed_env("CHROMASTAT")

    if test_config is None:
        if config_file is not None:
            config.from_pyfile(os.path.abspath(config_file))
        else:
            config.from_pyfile(os.path.join(os.getcwd(), 'chromastat.cfg'), silent=True)
    else:
        config.from_mapping(test_config)

    return config


def configure_logging(config, debug=False):
    """
    Logging goes to stderr, stdout is kept for the output documents
    """
    if debug:
        level = logging.DEBUG
    else:
        level = config.get('LOG_LEVEL', logging.INFO)

    logging.basicConfig(level=level,
                        format=f'%(asctime)s %(levelname)s %(name)s %(threadName)s : %(message)s')
    logging.debug('MAX_N: {}, ORACLE_MAX_N: {}'.format(config['MAX_N'], config['ORACLE_MAX_N']))
