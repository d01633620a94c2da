"""MCP tool server for the Turán workbench."""
