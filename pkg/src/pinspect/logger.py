"""
   Copyright 2024 The pinspect developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
"""

import atexit
import logging
from pathlib import Path
from typing import Optional

DEFAULT_FORMAT = '[%(asctime)s][%(levelname)s] %(name)s - %(message)s'


def get_default_logger():
    return logging.getLogger("pinspect.logger")


def get_estimator_logger():
    return logging.getLogger("pinspect.estimator")


def get_simulation_logger():
    return logging.getLogger("pinspect.simulation")


def get_harness_logger():
    return logging.getLogger("pinspect.harness")


def _all_loggers():
    return [
        get_default_logger(),
        get_estimator_logger(),
        get_simulation_logger(),
        get_harness_logger()
    ]


def _init_logger(logger: logging.Logger, format: Optional[str], level: int):
    format = format or DEFAULT_FORMAT
    logger.handlers.clear()
    logger.setLevel(level=level)
    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter(format))
    logger.addHandler(handler)


def init_loggers(format: Optional[str] = None, level: int = logging.WARNING):
    for logger in _all_loggers():
        _init_logger(logger, format, level)


def set_log_level(level: int):
    for logger in _all_loggers():
        logger.setLevel(level=level)


def set_log_file(log_file: Path):
    harness_logger = get_harness_logger()

    # Only one file handler supported
    for handler in list(harness_logger.handlers):
        if isinstance(handler, logging.FileHandler):
            harness_logger.removeHandler(handler)
            handler.close()

    file_handler = logging.FileHandler(filename=log_file, mode='w', delay=True)
    file_handler.setFormatter(logging.Formatter(DEFAULT_FORMAT))
    harness_logger.addHandler(file_handler)

    def cleanup():
        for handler in harness_logger.handlers:
            if isinstance(handler, logging.FileHandler):
                handler.close()

    atexit.register(cleanup)
