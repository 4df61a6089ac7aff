import logging
import sys
import multiprocessing as mp


def is_main_process():
    return mp.current_process().name == "MainProcess"


class DebugOnlyFilter(logging.Filter):
    """Passes ONLY messages with an exact level of DEBUG."""
    def filter(self, record):
        return record.levelno == logging.DEBUG


class InfoAndUpFilter(logging.Filter):
    """Passes ONLY messages with INFO and higher."""
    def filter(self, record):
        return record.levelno >= logging.INFO


_initialized = False  # Prevent re-initializing when sweep workers import the entry module


def init_logging(log_file: str = "debug.log", console_level: str = "INFO"):
    """
    Console records go to stderr, leaving stdout to command output. The console
    gets `console_level` and up; the debug file gets DEBUG records only
    and is opened by the main process alone, so pool workers never truncate it.
    """
    global _initialized
    if _initialized:
        return

    root_logger = logging.getLogger()
    root_logger.setLevel(logging.DEBUG)
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(console_level)
    if logging.getLevelName(console_level) != logging.DEBUG:
        console_handler.addFilter(InfoAndUpFilter())
    console_handler.setFormatter(logging.Formatter('%(levelname)s: %(message)s'))
    root_logger.addHandler(console_handler)

    if is_main_process() and log_file:
        try:
            file_handler = logging.FileHandler(log_file, mode='w', encoding='utf-8')
            file_handler.setLevel(logging.DEBUG)
            file_handler.addFilter(DebugOnlyFilter())
            file_handler.setFormatter(
                logging.Formatter('%(asctime)s - %(name)s - [%(levelname)s] %(message)s')
            )
            root_logger.addHandler(file_handler)
        except OSError as e:
            logging.error(f"Failed to initialize file logger at {log_file}: {e}")

    _initialized = True
