from d2ctools.utils.common_init import DEFAULT_LOG_LEVEL, configure_logging

package_version = "0.1.0"

# logzero's logger starts at DEBUG; library users get the D2C_LOG_LEVEL default without calling anything
try:
    configure_logging()
except ValueError:
    configure_logging(DEFAULT_LOG_LEVEL)
