from logic.logic_engine import LogicEngine, precision, level_of

__all__ = ['LogicEngine', 'precision', 'level_of']
