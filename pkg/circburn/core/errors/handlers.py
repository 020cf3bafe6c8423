import logging

from fastapi import FastAPI, Request, status
from fastapi.responses import JSONResponse

from circburn.core.api.envelope import error_envelope
from circburn.core.errors.exceptions import BurningToolkitException

logger = logging.getLogger(__name__)


def add_exception_handlers(app: FastAPI) -> None:
    """
    Add exception handlers to the FastAPI application
    """

    @app.exception_handler(BurningToolkitException)
    async def handle_toolkit_exception(request: Request, exc: BurningToolkitException):
        return JSONResponse(
            status_code=exc.status_code,
            content=error_envelope(message=exc.detail, code=exc.error_code),
        )

    @app.exception_handler(Exception)
    async def handle_generic_exception(request: Request, exc: Exception):
        logger.error(f"Unhandled error on {request.url.path}: {str(exc)}")
        return JSONResponse(
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
            content=error_envelope(
                message="An unexpected error occurred",
                code="INTERNAL_SERVER_ERROR",
            ),
        )
