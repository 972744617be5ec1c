# -*- coding: utf-8 -*-
# @Time   : 2026/9/14
# @Author : ccnvkit developers

"""
ccnvkit.utils.logger
###############################
"""

import logging
import os

import colorlog
from colorama import init

from ccnvkit.utils.utils import get_local_time, ensure_dir

log_colors_config = {
    'DEBUG': 'cyan',
    'WARNING': 'yellow',
    'ERROR': 'red',
    'CRITICAL': 'red',
}

_levels = {
    'debug': logging.DEBUG,
    'info': logging.INFO,
    'warning': logging.WARNING,
    'error': logging.ERROR,
    'critical': logging.CRITICAL,
}


def init_logger(config, command=None):
    """
    A logger that can show a message on standard output and write it into the
    file named `log.txt` simultaneously.
    All the message that you want to log MUST be str.

    Args:
        config (Config): An instance object of Config, used to record parameter information.
        command (str, optional): sub directory of ``log_root`` the log file goes to.

    Example:
        >>> init_logger(config, 'verify')
        >>> logger = logging.getLogger()
        >>> logger.info(report.render())
    """
    init(autoreset=True)

    state = config['state']
    level = _levels.get(state.lower(), logging.INFO) if state else logging.INFO

    sfmt = '%(log_color)s%(asctime)-15s %(levelname)s  %(message)s'
    sdatefmt = '%d %b %H:%M'
    sformatter = colorlog.ColoredFormatter(sfmt, sdatefmt, log_colors=log_colors_config)
    sh = logging.StreamHandler()
    sh.setLevel(level)
    sh.setFormatter(sformatter)
    handlers = [sh]

    if config['save_log'] is not False:
        log_root = config['log_root'] if config['log_root'] else './log/'
        log_dir = os.path.join(log_root, command or 'ccnvkit', get_local_time())
        ensure_dir(log_dir)

        filefmt = '%(asctime)-15s %(levelname)s  %(message)s'
        filedatefmt = '%a %d %b %Y %H:%M:%S'
        fileformatter = logging.Formatter(filefmt, filedatefmt)
        fh = logging.FileHandler(os.path.join(log_dir, 'log.txt'))
        fh.setLevel(level)
        fh.setFormatter(fileformatter)
        handlers.insert(0, fh)

    logging.basicConfig(level=level, handlers=handlers, force=True)
