"""Core configuration and exception hierarchy."""
