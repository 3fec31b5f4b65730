import logging

import pytest

from src.anticonc.core import logger as logger_module
from src.anticonc.core.logger import LOGGING_LEVEL, file_handler, set_verbosity


@pytest.fixture
def reset_levels():
    yield
    set_verbosity()


class TestSetVerbosity:
    """CLI verbosity flags map onto the root logger and the file handler."""

    def test_default_level(self, reset_levels):
        set_verbosity()
        assert logging.getLogger("").level == LOGGING_LEVEL
        assert file_handler.level == LOGGING_LEVEL

    def test_verbose(self, reset_levels):
        set_verbosity(verbose=True)
        assert logging.getLogger("").level == logging.DEBUG
        assert file_handler.level == logging.DEBUG

    def test_quiet(self, reset_levels):
        set_verbosity(quiet=True)
        assert logging.getLogger("").level == logging.WARNING

    def test_file_handler_installed(self):
        assert file_handler in logging.getLogger("").handlers
        assert logger_module.LOG_FILE_PATH.endswith("anticonc.log")
