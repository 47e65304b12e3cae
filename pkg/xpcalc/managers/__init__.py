from managers.run_manager import RunManager, RunReport, COMMANDS, NEEDS_CODE, EXIT_OK, EXIT_NOT_FOUND, EXIT_INPUT_ERROR

__all__ = ['RunManager', 'RunReport', 'COMMANDS', 'NEEDS_CODE', 'EXIT_OK', 'EXIT_NOT_FOUND', 'EXIT_INPUT_ERROR']
