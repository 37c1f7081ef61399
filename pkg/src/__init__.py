"""Down-up algebra workbench."""
