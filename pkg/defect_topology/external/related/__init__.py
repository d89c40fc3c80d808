"""Custom related objects
"""
