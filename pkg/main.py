"""
bourbakikit API Server
"""
import logging

import uvicorn
from fastapi import Depends, FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from api import __version__
from api.routers import catalog, health, rees
from api.utils import error_response, log_request
from config import settings
from core.exceptions import BourbakiKitError

# Configure logging
logging.basicConfig(level=settings.LOG_LEVEL, format=settings.LOG_FORMAT)

logger = logging.getLogger(__name__)

app = FastAPI(
    title="bourbakikit API",
    description="Bourbaki sequences of Koszul cycles and the Rees algebra of the Z_{n-2} ideal",
    version=__version__,
    docs_url="/docs",
    redoc_url="/redoc",
    dependencies=[Depends(log_request)]
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

app.include_router(health.router, prefix="/api/v1")
app.include_router(catalog.router, prefix="/api/v1")
app.include_router(rees.router, prefix="/api/v1")


@app.exception_handler(BourbakiKitError)
async def bourbakikit_error_handler(request: Request, exc: BourbakiKitError):
    logger.warning(f"❌ {request.method} {request.url.path}: {exc.message}")
    return JSONResponse(
        status_code=400,
        content=error_response(exc)
    )


@app.get("/", tags=["Root"])
async def root():
    return {
        "message": "bourbakikit API",
        "version": __version__,
        "status": "running",
        "docs": "/docs",
        "api_base": "/api/v1"
    }


@app.get("/health", tags=["Root"])
async def root_health():
    """Root health check endpoint"""
    return {
        "status": "healthy",
        "message": "bourbakikit API is running",
        "api_health": "/api/v1/health"
    }


if __name__ == "__main__":
    logger.info("Starting bourbakikit API server...")
    uvicorn.run(
        "main:app",
        host=settings.API_HOST,
        port=settings.API_PORT,
        reload=settings.DEBUG,
        log_level="info"
    )
