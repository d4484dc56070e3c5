import datetime
import logging
import os
import sys
from ..settings import Arguments

class Log_Manager(object):
    """
    Manager for the package logger.

    The logger is configured lazily on first use: a stream handler on standard
    error at the configured level and, if a log directory is set, a file
    handler that receives every message including exception tracebacks.
    """

    FORMAT = "%(asctime)s - %(levelname)s - %(message)s"

    def __init__(self, arguments):
        if isinstance(arguments, Arguments):
            settings = arguments.get_settings("log")
        else:
            raise TypeError("'arguments' must be an instance of Arguments")

        self._level = settings.get("log_level")
        self._directory = settings.get("log_directory")
        self._logger = None
        self._file_name = None

    @property
    def file_name(self):
        """
        Retrieve the path to the current log file, or `None` if logs are not
        written to a file.
        """

        return self._file_name

    def get_logger(self):
        """
        Retrieve the package logger, setting up its handlers if necessary.
        """

        if self._logger is not None:
            return self._logger

        formatter = logging.Formatter(self.FORMAT)

        package = __package__.split('.')[0]
        self._logger = logging.getLogger(package)
        self._logger.setLevel(logging.DEBUG)
        self._logger.propagate = False
        for handler in list(self._logger.handlers):
            self._logger.removeHandler(handler)
            handler.close()

        stream_handler = logging.StreamHandler(sys.stderr)
        stream_handler.setLevel(getattr(logging, self._level))
        stream_handler.setFormatter(formatter)
        self._logger.addHandler(stream_handler)

        if self._directory:
            if not os.path.isdir(self._directory):
                os.makedirs(self._directory)

            file_name = datetime.datetime.now().strftime("%Y-%m-%d_%H:%M:%S")
            self._file_name = os.path.join(self._directory,
                                           "{}.log".format(file_name))
            file_handler = logging.FileHandler(self._file_name)
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(formatter)
            self._logger.addHandler(file_handler)

        return self._logger

    def log_exception(self, source):
        """
        Log the exception that is currently being handled, with its traceback,
        as originating from the given `source` description.
        """

        self.get_logger().exception(source)

    def close(self):
        """
        Detach and close the handlers of the package logger.
        """

        if self._logger is None:
            return

        for handler in list(self._logger.handlers):
            self._logger.removeHandler(handler)
            handler.close()

        self._logger = None
