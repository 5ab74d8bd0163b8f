import os
import sys
import yaml
import logging
from decimal import Decimal, InvalidOperation
from fdhull.geometry import Point, check_point


def get_logger(
    name: str = "fdhull",
    stdout: bool = True,
    stdout_level: int | None = None,
    file: bool = False,
    file_level: int = logging.INFO,
    log_dir: str = "fdhull_logs",
) -> logging.Logger:
    """Returns a logger with optional stream and file handlers.

    The stream level defaults to the FDH_LOG_LEVEL environment variable, or
    WARNING when it is not set. Handlers are only attached once per name.
    """
    logger = logging.getLogger(name)
    if logger.handlers:
        # Already configured
        return logger

    if stdout_level is None:
        stdout_level = logging.getLevelName(
            os.environ.get("FDH_LOG_LEVEL", "WARNING").upper()
        )
    formatter = logging.Formatter(
        "%(asctime)s | %(name)s | %(levelname)s | %(message)s"
    )
    levels = []

    if stdout:
        stream_handler = logging.StreamHandler(sys.stderr)
        stream_handler.setLevel(stdout_level)
        stream_handler.setFormatter(formatter)
        logger.addHandler(stream_handler)
        levels.append(stream_handler.level)

    if file:
        os.makedirs(log_dir, exist_ok=True)
        file_handler = logging.FileHandler(os.path.join(log_dir, f"{name}.log"))
        file_handler.setLevel(file_level)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)
        levels.append(file_level)

    logger.setLevel(min(levels) if levels else logging.WARNING)
    logger.propagate = False
    return logger


def read_yaml(filepath: str) -> dict:
    """Read a yaml file into a dictionary."""
    with open(filepath, "r") as f:
        return yaml.safe_load(f)


def quantize(value: str, quantizer: int) -> int:
    """Convert a decimal string to grid units, rounding half to even."""
    scaled = Decimal(value.strip()) * quantizer
    return int(scaled.to_integral_value())


def parse_point(x: str, y: str, quantizer: int = 1) -> Point:
    """Parse a coordinate pair into a bounded grid point.

    Raises ValueError for non-numeric input and CoordinateOutOfRange for
    coordinates beyond the ingest bound.
    """
    try:
        if quantizer == 1:
            p = Point(int(x), int(y))
        else:
            p = Point(quantize(x, quantizer), quantize(y, quantizer))
    except (InvalidOperation, OverflowError) as e:
        raise ValueError(f"not a number: {x!r}, {y!r}") from e
    return check_point(p)
