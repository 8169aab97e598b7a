import functools
import time

import psutil

from sociolect.logger import logger


def log_elapsed_time(func):
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        start_time = time.time()
        result = func(*args, **kwargs)
        execution_time = time.time() - start_time
        rss_mb = psutil.Process().memory_info().rss / 2**20
        logger.info(f"{func.__name__} elapsed-time: {execution_time:.4f} sec, rss: {rss_mb:.1f} MB")
        return result

    return wrapper
