"""
Shared configuration, value types, errors and JSON report models.
"""
