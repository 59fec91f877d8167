import logging
from datetime import datetime

from vtchroma.core.config import settings


# Configure logging
def setup_logging(level: str | None = None) -> logging.Logger:
    handlers: list[logging.Handler] = [logging.StreamHandler()]
    if settings.LOG_TO_FILE:
        try:
            settings.LOG_DIR.mkdir(parents=True, exist_ok=True)
            log_file = settings.LOG_DIR / f"vtchroma_{datetime.now().strftime('%Y-%m-%d')}.log"
            handlers.append(logging.FileHandler(log_file))
        except OSError:
            # read-only sandboxes still get stderr logging
            pass

    logging.basicConfig(
        level=(level or settings.LOG_LEVEL).upper(),
        format=settings.LOG_FORMAT,
        handlers=handlers,
        force=True,
    )

    logger = logging.getLogger("vtchroma")
    if level:
        logger.setLevel(level.upper())
    return logger


logger = setup_logging()
