"""
Domain layer - Entidades e interfaces.
"""
