import logging as log


LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


def configLogger(debug=False):
    """
    Configure the root logger for use in a script, the command line tool or a notebook. Installs a single stream
    handler, calling it repeatedly only changes the level.

    Args:
        debug (`bool`): turn on / off debug messages
    """

    logger = log.getLogger()
    if not any(getattr(h, '_socialbandits', False) for h in logger.handlers):
        handler = log.StreamHandler()
        handler.setFormatter(log.Formatter(LOG_FORMAT))
        handler._socialbandits = True
        logger.addHandler(handler)

    if debug:
        logger.setLevel(log.DEBUG)
    else:
        logger.setLevel(log.INFO)
