import logging

import uvicorn

from api.init_api import init_api
from config import config

app = init_api(config)


def run():
    logging.basicConfig(level=config.LOG_LEVEL)
    logging.info("serving K3 pairs API on port %d", config.SERVER_PORT)
    uvicorn.run(
        "api.run:app",
        host=config.SERVER_HOST.host,
        port=config.SERVER_PORT,
        workers=config.WORKERS,
        log_level=config.LOG_LEVEL.lower(),
        access_log=config.IS_DEBUG,
    )


if __name__ == "__main__":
    run()
