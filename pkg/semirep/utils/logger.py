"""
Logging utilities for semirep.

Everything goes to stderr: stdout carries the JSON reports and must stay
byte-reproducible.
"""

import logging
import sys
import time
from datetime import datetime
from functools import wraps
from typing import Optional


def setup_logger(name: str, level: int = logging.INFO) -> logging.Logger:
    """
    Set up a logger with standardized formatting.

    Args:
        name: Name of the logger
        level: Logging level (default: INFO)

    Returns:
        Configured logger instance
    """
    logger = logging.getLogger(name)
    logger.setLevel(level)

    # One handler per logger, even when set up repeatedly
    if logger.handlers:
        for handler in logger.handlers:
            handler.setLevel(level)
        return logger

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    formatter = logging.Formatter(
        "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    )
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    return logger


def log_function_call(logger: Optional[logging.Logger] = None):
    """
    Decorator to log function calls with execution time.

    Args:
        logger: Logger instance to use (default: the function's module logger)
    """

    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            log = logger or logging.getLogger(func.__module__)
            start_time = time.time()
            log.debug(f"Calling function: {func.__name__}")
            try:
                result = func(*args, **kwargs)
                log.debug(f"Function {func.__name__} completed in {time.time() - start_time:.2f}s")
                return result
            except Exception as e:
                log.debug(
                    f"Function {func.__name__} failed after {time.time() - start_time:.2f}s: {e}"
                )
                raise

        return wrapper

    return decorator


class TimingContext:
    """Context manager for timing code blocks with detailed logging."""

    def __init__(self, logger: "RunLogger", operation: str, details: str = ""):
        self.logger = logger
        self.operation = operation
        self.details = details
        self.start_time = None
        self.duration = None

    def __enter__(self):
        self.start_time = time.time()
        self.logger.info(
            f"⏱️ START: {self.operation} at {datetime.now().strftime('%H:%M:%S.%f')[:-3]}"
        )
        if self.details:
            self.logger.info(f"   Details: {self.details}")
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.duration = time.time() - self.start_time
        self.logger.info(f"⏱️ END: {self.operation} completed in {self.duration:.3f}s")
        if exc_type:
            self.logger.error(f"   ❌ Failed with: {exc_type.__name__}: {exc_val}")
        return False


class RunLogger:
    """
    Centralized logger for one semirep run (a CLI command or a test session).
    """

    def __init__(self, name: str = "semirep", level: int = logging.INFO):
        self.logger = setup_logger(name, level)
        self.step_counter = 0

    def info(self, message: str):
        self.logger.info(message)

    def warning(self, message: str):
        self.logger.warning(message)

    def error(self, message: str, exc_info: bool = False):
        self.logger.error(message, exc_info=exc_info)

    def debug(self, message: str):
        self.logger.debug(message)

    def log_step(self, step_name: str, details: str = ""):
        """Log a processing step with auto-incrementing counter."""
        self.step_counter += 1
        self.logger.info(f"📍 STEP {self.step_counter:02d}: {step_name}")
        if details:
            self.logger.info(f"   {details}")

    def log_timing_context(self, operation: str, details: str = "") -> TimingContext:
        """Return a timing context manager for code blocks."""
        return TimingContext(self, operation, details)

    def log_green_summary(self, size: int, j_classes: int, regular: int, idempotents: int):
        self.logger.info(
            f"🧩 Semigroup of order {size}: {j_classes} J-classes "
            f"({regular} regular), {idempotents} idempotents"
        )

    def log_jclass(self, jclass_id: int, idempotent: int, group_order: int, n: int, m: int):
        self.logger.info(
            f"🔷 J{jclass_id}: e={idempotent}, |G|={group_order}, n={n}, m={m}"
        )

    def log_chop_split(self, dim: int, sub_dim: int, method: str):
        self.logger.debug(f"✂️ split dim {dim} -> {sub_dim} + {dim - sub_dim} ({method})")

    def log_simple(self, jclass_id: int, group_dim: int, dim: int):
        self.logger.info(f"✅ simple at J{jclass_id}: dim V={group_dim}, dim M={dim}")

    def log_check(self, name: str, passed: bool, detail: str = ""):
        mark = "PASS" if passed else "FAIL"
        suffix = f" ({detail})" if detail else ""
        if passed:
            self.logger.info(f"{mark} {name}{suffix}")
        else:
            self.logger.error(f"{mark} {name}{suffix}")
