from fastapi import FastAPI
import uvicorn

from circburn import __version__
from circburn.core.api.envelope import success_envelope
from circburn.core.config.settings import settings
from circburn.core.errors.handlers import add_exception_handlers
from circburn.features.bounds import router as bounds_router
from circburn.features.burning import router as burning_router
from circburn.features.circulants import router as circulants_router

app = FastAPI(
    title=settings.PROJECT_NAME,
    description="Burning numbers of circulant graphs",
    version=__version__,
    openapi_url=f"{settings.API_V1_STR}/openapi.json",
    docs_url=f"{settings.API_V1_STR}/docs",
    redoc_url=f"{settings.API_V1_STR}/redoc",
)

add_exception_handlers(app)

app.include_router(circulants_router, prefix=f"{settings.API_V1_STR}/circulants", tags=["circulants"])
app.include_router(burning_router, prefix=f"{settings.API_V1_STR}/burning", tags=["burning"])
app.include_router(bounds_router, prefix=f"{settings.API_V1_STR}/bounds", tags=["bounds"])


@app.get("/")
def read_root():
    """
    Root endpoint for health check
    """
    return success_envelope(
        message=f"{settings.PROJECT_NAME} is running",
        data={"version": __version__, "environment": settings.ENVIRONMENT},
    )


@app.get(f"{settings.API_V1_STR}/health")
def health_check():
    return success_envelope(
        message=f"{settings.PROJECT_NAME} is running",
        data={
            "version": __version__,
            "environment": settings.ENVIRONMENT,
            "exact_cap": settings.EXACT_CAP,
        },
    )


if __name__ == "__main__":
    uvicorn.run("circburn.main:app", host="0.0.0.0", port=settings.SERVER_PORT, reload=True)
