import sys
from typing import Optional, Sequence

from app.cli.routes import build_parser
from vtchroma.core.config import settings
from vtchroma.core.exceptions import ExitCode, handle_exception
from vtchroma.core.logging import logger, setup_logging


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.log_level:
        setup_logging(args.log_level)
    logger.info(f"{settings.PROJECT_NAME} {settings.VERSION}: {args.command}")
    try:
        return args.handler(args) or ExitCode.OK
    except Exception as exc:
        return handle_exception(exc)
    finally:
        logger.info(f"{args.command} finished")


if __name__ == "__main__":
    sys.exit(main())
