"""
Módulo principal src.
"""
