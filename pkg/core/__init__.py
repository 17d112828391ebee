# Core: constants, configuration and errors
