from embed.embedding_engine import EmbeddingEngine, DEFAULT_DFS_BUDGET

__all__ = ['EmbeddingEngine', 'DEFAULT_DFS_BUDGET']
