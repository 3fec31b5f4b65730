from ...core.config import settings
from .functions import distribution_task, quench_task, sample_probability_task, shutdown, startup

THREADS = settings.THREADS
CHUNK_SIZE = settings.CHUNK_SIZE


class WorkerSettings:
    functions = [sample_probability_task, quench_task, distribution_task]
    max_workers = THREADS
    chunk_size = CHUNK_SIZE
    on_startup = startup
    on_shutdown = shutdown
