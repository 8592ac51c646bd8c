import os
# Only log verbosity is configurable; computed output never depends on the environment.
K3BL_LOG_LEVEL=os.getenv("K3BL_LOG_LEVEL", "WARNING")
K3BL_LOG_FORMAT=os.getenv("K3BL_LOG_FORMAT", "%(asctime)s %(levelname)s %(name)s: %(message)s")
