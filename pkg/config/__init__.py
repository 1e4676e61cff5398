"""Django project configuration for subcity."""
